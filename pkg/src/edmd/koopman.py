from __future__ import annotations

import numpy as np

from .gram import GramPair
from .linalg import DEFAULT_RCOND, hermitian_pinv


def koopman_matrix(gram: GramPair, rcond: float = DEFAULT_RCOND) -> np.ndarray:
    """A = G† H: solução de mínimos quadrados de norma mínima de Ψ_Y = Ψ_X A."""
    return hermitian_pinv(gram.G, rcond) @ gram.H
