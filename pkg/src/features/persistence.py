"""Persistência de bases: matrizes KMX1 + sidecar JSON."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Optional

import numpy as np

from .base import Basis
from .fourier import FourierBasis
from .linear import LinearBasis
from .nystrom import NystromBasis
from ..data.snapshots import load_matrix, save_matrix
from ..kernels import KernelSpec
from ..utils.errors import ValidationError

SIDECAR = "basis.json"


def save_basis(basis: Basis, directory: Path, seed: Optional[int] = None) -> list[Path]:
    """Grava a base em `directory` e retorna os arquivos gerados."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    meta: dict = {"type": basis.method, "seed": seed}
    if isinstance(basis, FourierBasis):
        written.append(save_matrix(basis.Z, directory / "frequencies.kmx"))
        meta.update(family=basis.kernel.family, sigma=basis.kernel.sigma)
    elif isinstance(basis, NystromBasis):
        written.append(save_matrix(basis.landmarks, directory / "landmarks.kmx"))
        written.append(save_matrix(basis.U, directory / "eigenvectors.kmx"))
        written.append(save_matrix(basis.Lambda[None, :], directory / "eigenvalues.kmx"))
        meta.update(family=basis.kernel.family, sigma=basis.kernel.sigma, rank=basis.rank,
                    trunc_tol=basis.trunc_tol,
                    landmark_index=None if basis.landmark_index is None
                    else [int(i) for i in basis.landmark_index])
    elif isinstance(basis, LinearBasis):
        meta.update(d=basis.d)
    else:
        raise ValidationError(f"Base sem persistência definida: {type(basis).__name__}")
    sidecar = directory / SIDECAR
    sidecar.write_text(json.dumps(meta, indent=2, sort_keys=True), encoding="utf-8")
    written.append(sidecar)
    return written


def load_basis(directory: Path) -> Basis:
    directory = Path(directory)
    meta = json.loads((directory / SIDECAR).read_text(encoding="utf-8"))
    kind = meta.get("type")
    if kind == "rff":
        return FourierBasis(load_matrix(directory / "frequencies.kmx"),
                            KernelSpec(meta["family"], meta["sigma"]), meta.get("seed"))
    if kind == "nystrom":
        index = meta.get("landmark_index")
        return NystromBasis(load_matrix(directory / "landmarks.kmx"),
                            load_matrix(directory / "eigenvectors.kmx"),
                            load_matrix(directory / "eigenvalues.kmx")[0],
                            KernelSpec(meta["family"], meta["sigma"]), int(meta["rank"]),
                            float(meta["trunc_tol"]),
                            None if index is None else np.asarray(index, dtype=np.intp))
    if kind == "linear":
        return LinearBasis(int(meta["d"]))
    raise ValidationError(f"Tipo de base desconhecido em {directory / SIDECAR}: {kind}")
