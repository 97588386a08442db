"""Pipeline de ajuste e layout do diretório de modelo.

<out>/model.json        parâmetros resolvidos, dataset e histórico de extensões
<out>/basis/            base de features (exceto dmd)
<out>/gram_*.kmx        G, H e G† (somente rff, usados por `extend`)
<out>/eigenvalues.csv, modes.kmx, koopman.kmx, summary.json
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np

from ..adaptive import AdaptiveState
from ..data.sidecar import file_sha256
from ..data.snapshots import SnapshotSet, load_matrix, save_matrix
from ..edmd import (DEFAULT_RCOND, GramPair, KoopmanDecomposition, build_gram, dmd,
                    eigenfunction_residuals, export_decomposition, koopman_matrix, spectrum)
from ..features import Basis, FeatureMatrices, build_feature_matrices, save_basis
from ..features.nystrom import DEFAULT_TRUNC_TOL
from ..kernels import KernelSpec, estimate_bandwidth
from ..kernels.bandwidth import DEFAULT_MAX_PAIRS
from ..utils.errors import FormatError, ValidationError
from ..utils.logger import get_logger

logger = get_logger("cli")

MODEL_FILE = "model.json"
BASIS_DIR = "basis"
GRAM_FILES = {"G": "gram_G.kmx", "H": "gram_H.kmx", "Ginv": "gram_pinv.kmx"}
FIT_METHODS = ("rff", "nystrom_cheap", "nystrom_expensive", "nystrom_partial", "dmd", "linear")
KERNEL_METHODS = ("rff", "nystrom_cheap", "nystrom_expensive", "nystrom_partial")


def normalize_method(method: str) -> str:
    key = method.replace("-", "_").lower()
    if key not in FIT_METHODS:
        raise ValidationError(f"Método não suportado: {method}")
    return key


@dataclass(frozen=True, eq=False)
class FitOutcome:
    decomposition: KoopmanDecomposition
    basis: Optional[Basis] = None
    psi: Optional[FeatureMatrices] = None
    state: Optional[AdaptiveState] = None
    residuals: Optional[np.ndarray] = None


def resolve_kernel(family: str, sigma, snapshots: SnapshotSet,
                   max_pairs: int = DEFAULT_MAX_PAIRS, seed: int = 0) -> KernelSpec:
    """`sigma="auto"` usa a distância média entre snapshots."""
    if sigma == "auto":
        sigma = estimate_bandwidth(snapshots.X, max_pairs, seed)
    return KernelSpec(family, sigma)


def fit_pipeline(snapshots: SnapshotSet, method: str, K: int, kernel: Optional[KernelSpec],
                 seed: int, rcond: float = DEFAULT_RCOND, n_modes: Optional[int] = None,
                 n_interp: Optional[int] = None, rank: Optional[int] = None,
                 trunc_tol: float = DEFAULT_TRUNC_TOL) -> FitOutcome:
    method = normalize_method(method)
    if method == "dmd":
        return FitOutcome(dmd(snapshots, rank=rank, n_modes=n_modes, rcond=rcond))
    psi, basis = build_feature_matrices(method, snapshots, K, kernel, seed,
                                        n_interp=n_interp, trunc_tol=trunc_tol)
    state = None
    if method == "rff":
        state = AdaptiveState.from_features(psi, rcond)
        A = state.A
    else:
        A = koopman_matrix(build_gram(psi), rcond)
    dec = spectrum(A, psi, snapshots, n_modes=n_modes, rcond=rcond, method=method)
    return FitOutcome(dec, basis, psi, state, eigenfunction_residuals(dec, psi))


def state_from_model(model_dir: Path, psi: FeatureMatrices, rcond: float) -> AdaptiveState:
    """Reconstrói o estado adaptativo a partir de G, H e G† gravados."""
    model_dir = Path(model_dir)
    G, H, Ginv = (load_matrix(model_dir / GRAM_FILES[k]) for k in ("G", "H", "Ginv"))
    if G.shape != (psi.K, psi.K):
        raise FormatError(f"Gram gravada {G.shape} incompatível com K={psi.K}", 0)
    return AdaptiveState(psi.PsiX, psi.PsiY, GramPair(G, H), Ginv, Ginv @ H, rcond)


def _json_safe(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, dict):
        return {k: _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    return value


def write_json(path: Path, payload: dict) -> Path:
    path = Path(path)
    path.write_text(json.dumps(_json_safe(payload), indent=2, sort_keys=True), encoding="utf-8")
    return path


def dataset_entry(path: Path, y_path: Optional[Path], dt: float) -> dict:
    path = Path(path).resolve()
    entry = {"path": str(path), "sha256": file_sha256(path), "dt": dt, "y_path": None,
             "y_sha256": None}
    if y_path is not None:
        y_path = Path(y_path).resolve()
        entry.update(y_path=str(y_path), y_sha256=file_sha256(y_path))
    return entry


def write_model(out_dir: Path, meta: dict, outcome: FitOutcome,
                snapshots: SnapshotSet) -> list[Path]:
    """Grava modelo, base, Grams (rff) e exportação do espectro; retorna os arquivos."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    if outcome.basis is not None:
        written += save_basis(outcome.basis, out_dir / BASIS_DIR, meta.get("seed"))
    if outcome.state is not None:
        written += [save_matrix(outcome.state.gram.G, out_dir / GRAM_FILES["G"]),
                    save_matrix(outcome.state.gram.H, out_dir / GRAM_FILES["H"]),
                    save_matrix(outcome.state.Ginv, out_dir / GRAM_FILES["Ginv"])]
    dec = outcome.decomposition
    summary = {
        "method": meta["method"],
        "n_features": dec.A.shape[0],
        "d": snapshots.d,
        "M": snapshots.M,
        "leading_cont_eigs": [[float(z.real), float(z.imag)] for z in dec.cont_eigs[:4]],
    }
    if outcome.state is not None:
        summary.update(fallback=outcome.state.fallback,
                       penrose_residual=outcome.state.penrose_residual)
    written += export_decomposition(dec, out_dir, summary, outcome.residuals)
    written.append(write_json(out_dir / MODEL_FILE, meta))
    logger.info(f"Modelo gravado em {out_dir} ({len(written)} arquivos)")
    return written


def read_model(model_dir: Path) -> dict:
    path = Path(model_dir) / MODEL_FILE
    if not path.exists():
        raise ValidationError(f"Diretório não contém {MODEL_FILE}: {model_dir}")
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise FormatError(f"{path} inválido: {e.msg}", e.pos) from e
