from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..features.base import FeatureMatrices
from ..utils.errors import NumericError


@dataclass(frozen=True, eq=False)
class GramPair:
    """G = Ψ_X^H Ψ_X (hermitiana, PSD) e H = Ψ_X^H Ψ_Y."""

    G: np.ndarray
    H: np.ndarray

    @property
    def K(self) -> int:
        return self.G.shape[0]


def build_gram(psi: FeatureMatrices) -> GramPair:
    """Monta G e H com transposta conjugada (coincide com a transposta para features reais)."""
    if not (np.all(np.isfinite(psi.PsiX)) and np.all(np.isfinite(psi.PsiY))):
        raise NumericError("Features não finitas na montagem da Gram")
    PsiXh = psi.PsiX.conj().T
    G = PsiXh @ psi.PsiX
    G = 0.5 * (G + G.conj().T)
    return GramPair(G, PsiXh @ psi.PsiY)
