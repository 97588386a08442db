"""Exportação da decomposição: CSV de autovalores, modos KMX1 e resumo JSON."""
from __future__ import annotations

import csv
import json
import math
from pathlib import Path
from typing import Optional

import numpy as np

from .spectrum import KoopmanDecomposition
from ..data.snapshots import save_matrix

EIGENVALUE_COLUMNS = ["re", "im", "abs", "re_cont", "im_cont"]


def _finite_or_none(value: float) -> Optional[float]:
    return float(value) if math.isfinite(value) else None


def write_eigenvalues(dec: KoopmanDecomposition, path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(EIGENVALUE_COLUMNS)
        for mu, cont in zip(dec.mu, dec.cont_eigs):
            writer.writerow([repr(float(v)) for v in (mu.real, mu.imag, abs(mu), cont.real, cont.imag)])
    return path


def read_eigenvalues(path: Path) -> np.ndarray:
    with Path(path).open(newline="", encoding="utf-8") as fh:
        rows = list(csv.DictReader(fh))
    return np.array([complex(float(r["re"]), float(r["im"])) for r in rows])


def export_decomposition(dec: KoopmanDecomposition, directory: Path, summary: dict,
                         residuals: Optional[np.ndarray] = None) -> list[Path]:
    """Grava eigenvalues.csv, modes.kmx, koopman.kmx e summary.json em `directory`."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = [
        write_eigenvalues(dec, directory / "eigenvalues.csv"),
        save_matrix(dec.modes, directory / "modes.kmx"),
        save_matrix(dec.A, directory / "koopman.kmx"),
    ]
    payload = dict(summary)
    payload.update(
        n_modes=dec.n_modes,
        dt=dec.dt,
        eig_residual=dec.eig_residual,
        defective=dec.defective,
        residuals=None if residuals is None else [_finite_or_none(r) for r in residuals],
    )
    path = directory / "summary.json"
    path.write_text(json.dumps(payload, indent=2, sort_keys=True), encoding="utf-8")
    written.append(path)
    return written
