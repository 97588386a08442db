from __future__ import annotations
from typing import Optional, Type

from .base import Basis, FeatureBuilder, FeatureMatrices
from .fourier import RFFBuilder
from .linear import LinearBuilder
from .nystrom import (DEFAULT_TRUNC_TOL, NystromCheapBuilder, NystromExpensiveBuilder,
                      NystromPartialBuilder)
from ..data.snapshots import SnapshotSet
from ..kernels import KernelSpec
from ..utils.errors import ValidationError


class FeatureFactory:
    """Fábrica simples que escolhe o construtor de features pelo nome do método."""

    _map: dict[str, Type[FeatureBuilder]] = {
        "rff": RFFBuilder,
        "nystrom_cheap": NystromCheapBuilder,
        "nystrom_expensive": NystromExpensiveBuilder,
        "nystrom_partial": NystromPartialBuilder,
        "linear": LinearBuilder,
    }

    @classmethod
    def get_builder(cls, method: str, **options) -> FeatureBuilder:
        key = method.replace("-", "_").lower()
        builder_cls = cls._map.get(key)
        if not builder_cls:
            raise ValidationError(f"Método de features não suportado: {method}")
        if key == "nystrom_partial":
            if options.get("n_interp") is None:
                raise ValidationError("nystrom_partial exige n_interp")
            return builder_cls(options["n_interp"], options.get("trunc_tol", DEFAULT_TRUNC_TOL))
        if key.startswith("nystrom"):
            return builder_cls(options.get("trunc_tol", DEFAULT_TRUNC_TOL))
        return builder_cls()

    @classmethod
    def methods(cls) -> list[str]:
        return list(cls._map)


def build_feature_matrices(method: str, snapshots: SnapshotSet, K: int,
                           kernel: Optional[KernelSpec], seed: int,
                           **options) -> tuple[FeatureMatrices, Basis]:
    """Constrói Ψ_X, Ψ_Y com o método escolhido e retorna também a base."""
    return FeatureFactory.get_builder(method, **options).build(snapshots, K, kernel, seed)
