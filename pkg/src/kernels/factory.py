from __future__ import annotations
from typing import Type

from .base import Kernel, KernelSpec
from .gaussian import GaussianKernel
from .laplacian import LaplacianKernel
from .cauchy import CauchyKernel


class KernelFactory:
    """Fábrica simples que escolhe a implementação de kernel pela família."""

    _map: dict[str, Type[Kernel]] = {
        "gaussian": GaussianKernel,
        "laplacian": LaplacianKernel,
        "cauchy": CauchyKernel,
    }

    @classmethod
    def get_kernel(cls, spec: KernelSpec) -> Kernel:
        return cls._map[spec.family](spec.sigma)

    @classmethod
    def families(cls) -> list[str]:
        return sorted(cls._map)
