"""Comparação de espectros líderes contra uma decomposição de referência (ex.: DMD)."""
from __future__ import annotations

import numpy as np
from scipy.optimize import linear_sum_assignment

from .spectrum import KoopmanDecomposition
from ..utils.errors import ValidationError


def _match(dec: KoopmanDecomposition, ref: KoopmanDecomposition, n: int):
    if n < 1 or n > min(dec.n_modes, ref.n_modes):
        raise ValidationError(f"n deve estar entre 1 e {min(dec.n_modes, ref.n_modes)}, recebido {n}")
    a, b = dec.cont_eigs[:n], ref.cont_eigs[:n]
    cost = np.abs(a[:, None] - b[None, :])
    cost = np.where(np.isfinite(cost), cost, 1e300)
    rows, cols = linear_sum_assignment(cost)
    return rows, cols, cost[rows, cols]


def leading_eigenvalue_error(dec: KoopmanDecomposition, ref: KoopmanDecomposition, n: int = 2) -> float:
    """Maior distância no plano complexo entre os n autovalores contínuos líderes, após pareamento."""
    return float(np.max(_match(dec, ref, n)[2]))


def mode_similarity(dec: KoopmanDecomposition, ref: KoopmanDecomposition, n: int = 2) -> np.ndarray:
    """|cos| entre modos pareados, invariante à fase complexa."""
    if dec.modes.shape[0] != ref.modes.shape[0]:
        raise ValidationError("Modos com dimensões de estado diferentes")
    rows, cols, _ = _match(dec, ref, n)
    sims = []
    for i, j in zip(rows, cols):
        a, b = dec.modes[:, i], ref.modes[:, j]
        denom = np.linalg.norm(a) * np.linalg.norm(b)
        sims.append(abs(np.vdot(a, b)) / denom if denom > 0 else 0.0)
    return np.asarray(sims)
