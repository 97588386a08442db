from __future__ import annotations

import numpy as np
from scipy.spatial.distance import cdist

from .base import Kernel


class GaussianKernel(Kernel):
    """k(x, y) = exp(−‖x − y‖² / (2σ²)); frequências normais com desvio 1/σ."""

    def matrix(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        sq = cdist(A, B, metric="sqeuclidean")
        return np.exp(-sq / (2.0 * self.sigma ** 2))

    def sample_frequencies(self, K: int, d: int, rng: np.random.Generator) -> np.ndarray:
        return rng.normal(0.0, 1.0 / self.sigma, size=(K, d))
