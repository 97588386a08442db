"""Pares de snapshots (X, Y) e carregamento a partir de arquivos."""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .factory import FormatFactory
from ..utils.errors import InsufficientDataError, ValidationError
from ..utils.logger import get_logger

logger = get_logger("data")


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=np.float64)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class SnapshotSet:
    """Matrizes de snapshots pareados, uma coluna por instante.

    X[:, j] é o estado x_j e Y[:, j] o estado seguinte x_{j+1}; dt é o
    intervalo de amostragem. As matrizes são somente-leitura.
    """

    X: np.ndarray
    Y: np.ndarray
    dt: float

    def __post_init__(self):
        X, Y = _frozen(self.X), _frozen(self.Y)
        if X.ndim != 2 or Y.ndim != 2:
            raise ValidationError("X e Y devem ser matrizes 2-D")
        if X.shape != Y.shape:
            raise ValidationError(f"X {X.shape} e Y {Y.shape} com dimensões diferentes")
        if X.shape[0] < 1:
            raise ValidationError("Dimensão de estado d deve ser ≥ 1")
        if X.shape[1] < 1:
            raise InsufficientDataError("São necessários ao menos 2 snapshots (M ≥ 1)")
        if not (np.isfinite(self.dt) and self.dt > 0):
            raise ValidationError(f"dt deve ser positivo, recebido {self.dt}")
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "Y", Y)
        object.__setattr__(self, "dt", float(self.dt))

    @property
    def d(self) -> int:
        return self.X.shape[0]

    @property
    def M(self) -> int:
        return self.X.shape[1]

    @classmethod
    def from_trajectory(cls, trajectory: np.ndarray, dt: float) -> "SnapshotSet":
        """Pareamento por deslocamento de uma trajetória d × (M+1)."""
        traj = np.asarray(trajectory, dtype=np.float64)
        if traj.ndim != 2:
            raise ValidationError("Trajetória deve ser uma matriz 2-D")
        if traj.shape[1] < 2:
            raise InsufficientDataError(
                f"Trajetória com {traj.shape[1]} snapshot(s); são necessários ao menos 2")
        return cls(traj[:, :-1], traj[:, 1:], dt)

    @classmethod
    def from_pairs(cls, X: np.ndarray, Y: np.ndarray, dt: float) -> "SnapshotSet":
        """Pares explícitos, por exemplo vindos de várias trajetórias."""
        return cls(X, Y, dt)

    def subset(self, columns: np.ndarray) -> "SnapshotSet":
        columns = np.asarray(columns, dtype=np.intp)
        return SnapshotSet(self.X[:, columns], self.Y[:, columns], self.dt)

    def is_trajectory(self) -> bool:
        return bool(np.array_equal(self.X[:, 1:], self.Y[:, :-1]))

    def to_trajectory(self) -> np.ndarray:
        """Reconstrói a trajetória d × (M+1); falha se os pares não forem encadeados."""
        if not self.is_trajectory():
            raise ValidationError("Pares de snapshots não formam uma trajetória única")
        return np.hstack([self.X, self.Y[:, -1:]])


def load_snapshots(path: Path, dt: float, y_path: Path | None = None) -> SnapshotSet:
    """Carrega uma trajetória d × (M+1), ou o par de arquivos X e Y (d × M cada)."""
    if not (np.isfinite(dt) and dt > 0):
        raise ValidationError(f"dt deve ser positivo, recebido {dt}")
    path = Path(path)
    X = FormatFactory.get_format_for_path(path).read(path)
    if np.iscomplexobj(X):
        raise ValidationError(f"Snapshots devem ser reais: {path}")
    if y_path is None:
        snapshots = SnapshotSet.from_trajectory(X, dt)
    else:
        y_path = Path(y_path)
        Y = FormatFactory.get_format_for_path(y_path).read(y_path)
        if np.iscomplexobj(Y):
            raise ValidationError(f"Snapshots devem ser reais: {y_path}")
        snapshots = SnapshotSet.from_pairs(X, Y, dt)
    logger.info(f"Snapshots carregados de {path}: d={snapshots.d}, M={snapshots.M}, dt={snapshots.dt}")
    return snapshots


def save_matrix(m: np.ndarray, path: Path) -> Path:
    """Grava a matriz no formato indicado pela extensão (.kmx ou .csv)."""
    return FormatFactory.get_format_for_path(Path(path)).write(m, Path(path))


def load_matrix(path: Path) -> np.ndarray:
    return FormatFactory.get_format_for_path(Path(path)).read(Path(path))
