"""Autofunções empíricas de kernel pelo método de Nyström.

Ajuste: matriz de kernel dos K landmarks, M_k U = U Λ. Avaliação nos
landmarks: ψ_i(x_j) = √K U_{j,i}. Interpolação em um ponto y:
ψ_i(y) = (√K / Λ_ii) Σ_j k(y, x_j) U_{j,i}.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
import scipy.linalg

from .base import Basis, FeatureBuilder, FeatureMatrices
from ..data.snapshots import SnapshotSet
from ..kernels import KernelFactory, KernelSpec
from ..utils.errors import DegenerateKernelError, NumericError, ValidationError
from ..utils.logger import get_logger
from ..utils.parallel import map_column_blocks
from ..utils.rng import make_rng

logger = get_logger("features")

DEFAULT_TRUNC_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class NystromBasis(Basis):
    """Landmarks (d × K), autovetores U (K × K), autovalores Λ decrescentes e posto retido."""

    landmarks: np.ndarray
    U: np.ndarray
    Lambda: np.ndarray
    kernel: KernelSpec
    rank: int
    trunc_tol: float = DEFAULT_TRUNC_TOL
    landmark_index: Optional[np.ndarray] = None

    method = "nystrom"

    @property
    def n_features(self) -> int:
        return self.rank

    @property
    def K(self) -> int:
        return self.landmarks.shape[1]

    @property
    def d(self) -> int:
        return self.landmarks.shape[0]

    @property
    def eigenvalues(self) -> np.ndarray:
        """Aproximações λ_i = Λ_ii / K dos autovalores do operador de kernel."""
        return self.Lambda[:self.rank] / self.K

    def landmark_values(self) -> np.ndarray:
        """Features nos próprios landmarks, √K U[:, :r] (K × r)."""
        return np.sqrt(self.K) * self.U[:, :self.rank]

    def evaluate(self, S: np.ndarray) -> np.ndarray:
        return nystrom_interpolate(self, S)


def nystrom_fit(landmarks: np.ndarray, kernel: KernelSpec,
                trunc_tol: float = DEFAULT_TRUNC_TOL,
                landmark_index: Optional[np.ndarray] = None) -> NystromBasis:
    """Autodecomposição simétrica da matriz de kernel dos landmarks, com truncamento relativo."""
    L = np.asarray(landmarks, dtype=np.float64)
    if L.ndim != 2 or L.shape[1] < 1:
        raise ValidationError("Landmarks devem formar uma matriz d × K com K ≥ 1")
    if trunc_tol < 0:
        raise ValidationError(f"trunc_tol deve ser não negativo, recebido {trunc_tol}")
    Mk = KernelFactory.get_kernel(kernel).matrix(L.T, L.T)
    if not np.all(np.isfinite(Mk)):
        raise NumericError("Matriz de kernel dos landmarks com valores não finitos")
    Lambda, U = scipy.linalg.eigh(Mk)
    Lambda, U = Lambda[::-1].copy(), U[:, ::-1].copy()
    if not Lambda[0] > 0:
        raise DegenerateKernelError("Matriz de kernel sem autovalores positivos")
    rank = int(np.count_nonzero(Lambda > trunc_tol * Lambda[0]))
    if rank == 0:
        raise DegenerateKernelError("Todos os autovalores abaixo da tolerância de truncamento")
    if rank < L.shape[1]:
        logger.info(f"Nyström: {L.shape[1] - rank} autopares truncados (posto {rank})")
    return NystromBasis(L, U, Lambda, kernel, rank, trunc_tol, landmark_index)


def nystrom_interpolate(basis: NystromBasis, S: np.ndarray) -> np.ndarray:
    """Interpolação das autofunções retidas nas colunas de S (d × n); retorna n × r."""
    S = np.asarray(S, dtype=np.float64)
    if S.ndim == 1:
        S = S[:, None]
    if S.shape[0] != basis.d:
        raise ValidationError(f"Snapshots com d={S.shape[0]}, landmarks com d={basis.d}")
    kernel = KernelFactory.get_kernel(basis.kernel)
    LT = basis.landmarks.T
    weights = basis.U[:, :basis.rank] * (np.sqrt(basis.K) / basis.Lambda[:basis.rank])
    return map_column_blocks(lambda block: kernel.matrix(block.T, LT) @ weights, S)


def sample_landmarks(M: int, K: int, seed: int) -> np.ndarray:
    """K índices distintos de colunas, uniformes e ordenados."""
    if K < 1:
        raise ValidationError(f"K deve ser positivo, recebido {K}")
    if K > M:
        raise ValidationError(f"Nyström exige K ≤ M (K={K}, M={M})")
    return np.sort(make_rng(seed).choice(M, size=K, replace=False))


class NystromExpensiveBuilder(FeatureBuilder):
    """Variante "cara": interpola Ψ_X e Ψ_Y em todos os M snapshots."""

    def __init__(self, trunc_tol: float = DEFAULT_TRUNC_TOL):
        self.trunc_tol = trunc_tol

    def build(self, snapshots: SnapshotSet, K: int, kernel: Optional[KernelSpec],
              seed: int) -> tuple[FeatureMatrices, NystromBasis]:
        kernel = self._require_kernel(kernel, K)
        index = sample_landmarks(snapshots.M, K, seed)
        basis = nystrom_fit(snapshots.X[:, index], kernel, self.trunc_tol, index)
        logger.info(f"Nyström caro: interpolando {basis.rank} features em {snapshots.M} pares")
        psi = FeatureMatrices(nystrom_interpolate(basis, snapshots.X),
                              nystrom_interpolate(basis, snapshots.Y))
        return psi, basis


class NystromCheapBuilder(FeatureBuilder):
    """Variante "barata": Ψ_X nos landmarks e Ψ_Y só nos K sucessores; M efetivo = K."""

    def __init__(self, trunc_tol: float = DEFAULT_TRUNC_TOL):
        self.trunc_tol = trunc_tol

    def build(self, snapshots: SnapshotSet, K: int, kernel: Optional[KernelSpec],
              seed: int) -> tuple[FeatureMatrices, NystromBasis]:
        kernel = self._require_kernel(kernel, K)
        index = sample_landmarks(snapshots.M, K, seed)
        basis = nystrom_fit(snapshots.X[:, index], kernel, self.trunc_tol, index)
        logger.info(f"Nyström barato: {basis.rank} features em {K} landmarks")
        psi = FeatureMatrices(basis.landmark_values(),
                              nystrom_interpolate(basis, snapshots.Y[:, index]), rows=index)
        return psi, basis


class NystromPartialBuilder(FeatureBuilder):
    """Interpola Ψ_X e Ψ_Y num subconjunto de n_interp pares que contém os landmarks."""

    def __init__(self, n_interp: int, trunc_tol: float = DEFAULT_TRUNC_TOL):
        self.n_interp = n_interp
        self.trunc_tol = trunc_tol

    def build(self, snapshots: SnapshotSet, K: int, kernel: Optional[KernelSpec],
              seed: int) -> tuple[FeatureMatrices, NystromBasis]:
        kernel = self._require_kernel(kernel, K)
        M = snapshots.M
        if not K <= self.n_interp <= M:
            raise ValidationError(f"n_interp deve estar entre K={K} e M={M}, recebido {self.n_interp}")
        index = sample_landmarks(M, K, seed)
        rest = np.setdiff1d(np.arange(M), index)
        extra = make_rng(seed, 1).choice(rest, size=self.n_interp - K, replace=False)
        rows = np.sort(np.concatenate([index, extra]))
        basis = nystrom_fit(snapshots.X[:, index], kernel, self.trunc_tol, index)
        logger.info(f"Nyström parcial: {basis.rank} features em {len(rows)} pares")
        psi = FeatureMatrices(nystrom_interpolate(basis, snapshots.X[:, rows]),
                              nystrom_interpolate(basis, snapshots.Y[:, rows]), rows=rows)
        return psi, basis
