from __future__ import annotations
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .base import Basis, FeatureBuilder, FeatureMatrices
from ..data.snapshots import SnapshotSet
from ..kernels import KernelSpec
from ..utils.errors import ValidationError


@dataclass(frozen=True)
class LinearBasis(Basis):
    """Ψ(x) = x: as próprias coordenadas do estado (recupera o span do DMD)."""

    d: int

    method = "linear"

    @property
    def n_features(self) -> int:
        return self.d

    def evaluate(self, S: np.ndarray) -> np.ndarray:
        S = np.asarray(S, dtype=np.float64)
        if S.ndim == 1:
            S = S[:, None]
        if S.shape[0] != self.d:
            raise ValidationError(f"Snapshots com d={S.shape[0]}, base linear com d={self.d}")
        return S.T.copy()


class LinearBuilder(FeatureBuilder):
    """Features lineares; K e o kernel são ignorados."""

    def build(self, snapshots: SnapshotSet, K: int, kernel: Optional[KernelSpec],
              seed: int) -> tuple[FeatureMatrices, LinearBasis]:
        basis = LinearBasis(snapshots.d)
        return FeatureMatrices(basis.evaluate(snapshots.X), basis.evaluate(snapshots.Y)), basis
