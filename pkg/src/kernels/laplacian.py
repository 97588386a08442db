from __future__ import annotations

import numpy as np
from scipy.spatial.distance import cdist

from .base import Kernel


class LaplacianKernel(Kernel):
    """k(x, y) = exp(−‖x − y‖₁ / σ); densidade espectral de Cauchy com escala 1/σ por coordenada."""

    def matrix(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        return np.exp(-cdist(A, B, metric="cityblock") / self.sigma)

    def sample_frequencies(self, K: int, d: int, rng: np.random.Generator) -> np.ndarray:
        return rng.standard_cauchy(size=(K, d)) / self.sigma
