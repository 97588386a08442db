from __future__ import annotations

import numpy as np

from .base import Kernel


class CauchyKernel(Kernel):
    """k(x, y) = ∏_j 1 / (1 + ((x_j − y_j)/σ)²); densidade espectral de Laplace com escala 1/σ."""

    def matrix(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        out = np.ones((A.shape[0], B.shape[0]))
        for j in range(A.shape[1]):
            diff = (A[:, j, None] - B[None, :, j]) / self.sigma
            out /= 1.0 + diff * diff
        return out

    def sample_frequencies(self, K: int, d: int, rng: np.random.Generator) -> np.ndarray:
        return rng.laplace(0.0, 1.0 / self.sigma, size=(K, d))
