# Package de dados: snapshots e formatos de matriz
from .factory import FormatFactory
from .sidecar import file_sha256, load_dataset, read_sidecar, sidecar_path, write_sidecar
from .snapshots import SnapshotSet, load_matrix, load_snapshots, save_matrix

__all__ = ["FormatFactory", "SnapshotSet", "file_sha256", "load_dataset", "load_matrix",
           "load_snapshots", "read_sidecar", "save_matrix", "sidecar_path", "write_sidecar"]
