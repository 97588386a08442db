"""Metadados JSON ao lado de um arquivo de snapshots (`<nome>.json`)."""
from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Optional

from .snapshots import SnapshotSet, load_snapshots
from ..utils.errors import FormatError

DEFAULT_DT = 1.0


def file_sha256(path: Path) -> str:
    digest = hashlib.sha256()
    with Path(path).open("rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest()


def sidecar_path(path: Path) -> Path:
    return Path(path).with_suffix(".json")


def read_sidecar(path: Path) -> dict:
    """Metadados do dataset; {} se não houver sidecar."""
    side = sidecar_path(path)
    if not side.exists():
        return {}
    raw = side.read_bytes()
    try:
        meta = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as e:
        raise FormatError(f"Sidecar JSON inválido: {side}: {e}", getattr(e, "pos", 0)) from e
    if not isinstance(meta, dict):
        raise FormatError(f"Sidecar JSON deve ser um objeto: {side}", 0)
    return meta


def write_sidecar(path: Path, meta: dict) -> Path:
    side = sidecar_path(path)
    side.write_text(json.dumps(meta, indent=2, sort_keys=True), encoding="utf-8")
    return side


def load_dataset(path: Path, dt: Optional[float] = None,
                 y_path: Optional[Path] = None) -> SnapshotSet:
    """Carrega snapshots resolvendo dt e o arquivo Y pelo sidecar quando não informados."""
    path = Path(path)
    meta = read_sidecar(path)
    if dt is None:
        dt = float(meta.get("dt", DEFAULT_DT))
    if y_path is None and meta.get("y_file"):
        y_path = path.parent / meta["y_file"]
    return load_snapshots(path, dt, y_path)
