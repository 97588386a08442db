"""Pseudoinversa de Moore–Penrose para matrizes hermitianas."""
from __future__ import annotations

import numpy as np
import scipy.linalg

from ..utils.errors import DegenerateDataError, NumericError

DEFAULT_RCOND = 1e-10


def hermitian_pinv(G: np.ndarray, rcond: float = DEFAULT_RCOND) -> np.ndarray:
    """Pseudoinversa via autodecomposição, descartando |λ| ≤ rcond·max|λ|."""
    if not np.all(np.isfinite(G)):
        raise NumericError("Matriz com valores não finitos na pseudoinversa")
    if G.shape[0] == 0:
        return np.zeros_like(G)
    w, V = scipy.linalg.eigh(G)
    scale = np.max(np.abs(w))
    if not scale > np.finfo(np.float64).tiny:
        raise DegenerateDataError("Matriz de Gram inteiramente abaixo da tolerância")
    keep = np.abs(w) > rcond * scale
    Vk = V[:, keep]
    return (Vk / w[keep]) @ Vk.conj().T


def penrose_residuals(G: np.ndarray, P: np.ndarray) -> tuple[float, float, float, float]:
    """Resíduos relativos das quatro identidades de Penrose de P como pseudoinversa de G."""
    def rel(a: np.ndarray, b: np.ndarray) -> float:
        scale = max(np.linalg.norm(b), np.finfo(np.float64).tiny)
        return float(np.linalg.norm(a - b) / scale)

    GP, PG = G @ P, P @ G
    return (rel(GP @ G, G), rel(PG @ P, P), rel(GP.conj().T, GP), rel(PG.conj().T, PG))
