from __future__ import annotations
from abc import ABC, abstractmethod
from dataclasses import dataclass

import numpy as np

from ..utils.errors import ValidationError

FAMILIES = ("gaussian", "laplacian", "cauchy")


@dataclass(frozen=True)
class KernelSpec:
    """Família de kernel invariante por translação + largura de banda σ."""

    family: str
    sigma: float

    def __post_init__(self):
        family = str(self.family).lower()
        if family not in FAMILIES:
            raise ValidationError(f"Família de kernel desconhecida: {self.family}")
        if not (np.isfinite(self.sigma) and self.sigma > 0):
            raise ValidationError(f"sigma deve ser positivo e finito, recebido {self.sigma}")
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "sigma", float(self.sigma))


class Kernel(ABC):
    """Interface para kernels normalizados (k(x, x) = 1) com densidade espectral conhecida."""

    def __init__(self, sigma: float):
        self.sigma = sigma

    @abstractmethod
    def matrix(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        """Matriz de kernel entre as linhas de A (n × d) e de B (m × d), formato n × m."""
        raise NotImplementedError()

    @abstractmethod
    def sample_frequencies(self, K: int, d: int, rng: np.random.Generator) -> np.ndarray:
        """K frequências i.i.d. da densidade espectral λ(z), formato K × d."""
        raise NotImplementedError()

    def evaluate(self, x: np.ndarray, y: np.ndarray) -> float:
        x = np.asarray(x, dtype=np.float64).ravel()
        y = np.asarray(y, dtype=np.float64).ravel()
        if x.shape != y.shape or x.size == 0:
            raise ValidationError(f"Dimensões incompatíveis: {x.shape} e {y.shape}")
        return float(self.matrix(x[None, :], y[None, :])[0, 0])
