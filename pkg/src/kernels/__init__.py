# Package de kernels
from __future__ import annotations

import numpy as np

from .base import FAMILIES, Kernel, KernelSpec
from .bandwidth import estimate_bandwidth
from .factory import KernelFactory
from ..utils.errors import ValidationError
from ..utils.rng import make_rng


def kernel_eval(spec: KernelSpec, x: np.ndarray, y: np.ndarray) -> float:
    """Avalia k(x, y) para a família e a banda de `spec`."""
    return KernelFactory.get_kernel(spec).evaluate(x, y)


def sample_frequencies(spec: KernelSpec, K: int, d: int, seed: int) -> np.ndarray:
    """Matriz de frequências Z (K × d) amostrada de λ(z); determinística dada a semente."""
    if K < 1 or d < 1:
        raise ValidationError(f"K e d devem ser positivos, recebido K={K}, d={d}")
    return KernelFactory.get_kernel(spec).sample_frequencies(K, d, make_rng(seed))


__all__ = ["FAMILIES", "Kernel", "KernelFactory", "KernelSpec", "estimate_bandwidth",
           "kernel_eval", "sample_frequencies"]
