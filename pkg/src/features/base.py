from __future__ import annotations
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..data.snapshots import SnapshotSet
from ..kernels.base import KernelSpec
from ..utils.errors import NumericError, ValidationError


@dataclass(frozen=True, eq=False)
class FeatureMatrices:
    """Matrizes de features Ψ_X e Ψ_Y (M × K), uma linha por snapshot.

    `rows` indica quais colunas do SnapshotSet originaram as linhas; None
    significa todas, na ordem original.
    """

    PsiX: np.ndarray
    PsiY: np.ndarray
    rows: Optional[np.ndarray] = None

    def __post_init__(self):
        if self.PsiX.shape != self.PsiY.shape or self.PsiX.ndim != 2:
            raise ValidationError(f"Ψ_X {self.PsiX.shape} e Ψ_Y {self.PsiY.shape} incompatíveis")
        if not (np.all(np.isfinite(self.PsiX)) and np.all(np.isfinite(self.PsiY))):
            raise NumericError("Matrizes de features com valores não finitos")

    @property
    def M(self) -> int:
        return self.PsiX.shape[0]

    @property
    def K(self) -> int:
        return self.PsiX.shape[1]

    def snapshots_for(self, snapshots: SnapshotSet) -> SnapshotSet:
        """SnapshotSet alinhado às linhas destas features."""
        return snapshots if self.rows is None else snapshots.subset(self.rows)

    def scaled(self, factor: complex) -> "FeatureMatrices":
        return FeatureMatrices(self.PsiX * factor, self.PsiY * factor, self.rows)


class Basis(ABC):
    """Interface para dicionários de features avaliáveis em estados arbitrários."""

    method: str = ""

    @property
    @abstractmethod
    def n_features(self) -> int:
        raise NotImplementedError()

    @abstractmethod
    def evaluate(self, S: np.ndarray) -> np.ndarray:
        """Avalia as features nas colunas de S (d × n) e retorna n × K."""
        raise NotImplementedError()


class FeatureBuilder(ABC):
    """Estratégia de construção de Ψ_X, Ψ_Y a partir dos snapshots."""

    @abstractmethod
    def build(self, snapshots: SnapshotSet, K: int, kernel: Optional[KernelSpec],
              seed: int) -> tuple[FeatureMatrices, Basis]:
        """Constrói as matrizes de features e retorna também a base usada."""
        raise NotImplementedError()

    @staticmethod
    def _require_kernel(kernel: Optional[KernelSpec], K: int) -> KernelSpec:
        if K < 1:
            raise ValidationError(f"K deve ser positivo, recebido {K}")
        if kernel is None:
            raise ValidationError("Método baseado em kernel exige um KernelSpec")
        return kernel
