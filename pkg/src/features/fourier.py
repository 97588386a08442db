"""Features aleatórias de Fourier: ψ_z(x) = exp(i⟨z, x⟩) com z ~ λ(z)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .base import Basis, FeatureBuilder, FeatureMatrices
from ..data.snapshots import SnapshotSet
from ..kernels import KernelFactory, KernelSpec, sample_frequencies
from ..utils.errors import ValidationError
from ..utils.logger import get_logger
from ..utils.parallel import map_column_blocks
from ..utils.rng import make_rng

logger = get_logger("features")
IMAG_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class FourierBasis(Basis):
    """Frequências Z (K × d) e o kernel que elas aproximam."""

    Z: np.ndarray
    kernel: KernelSpec
    seed: Optional[int] = None

    method = "rff"

    def __post_init__(self):
        Z = np.asarray(self.Z, dtype=np.float64)
        if Z.ndim != 2 or Z.shape[0] < 1 or Z.shape[1] < 1:
            raise ValidationError(f"Z deve ser K × d com K, d ≥ 1; recebido {Z.shape}")
        if not np.all(np.isfinite(Z)):
            raise ValidationError("Frequências não finitas")
        object.__setattr__(self, "Z", Z)

    @property
    def n_features(self) -> int:
        return self.Z.shape[0]

    @property
    def d(self) -> int:
        return self.Z.shape[1]

    def evaluate(self, S: np.ndarray) -> np.ndarray:
        return rff_evaluate(self, S)

    def extended(self, Z_new: np.ndarray) -> "FourierBasis":
        return FourierBasis(np.vstack([self.Z, Z_new]), self.kernel, self.seed)


def rff_evaluate(basis: FourierBasis, S: np.ndarray) -> np.ndarray:
    """Entrada (m, j) = exp(i⟨z_j, x_m⟩); retorna n × K complexo."""
    S = np.asarray(S, dtype=np.float64)
    if S.ndim == 1:
        S = S[:, None]
    if S.shape[0] != basis.d:
        raise ValidationError(f"Snapshots com d={S.shape[0]}, frequências com d={basis.d}")
    Z = basis.Z
    return map_column_blocks(lambda block: np.exp(1j * (block.T @ Z.T)), S)


def rff_kernel_estimate(basis: FourierBasis, x: np.ndarray, y: np.ndarray) -> float:
    """Estimativa de Monte Carlo (1/K) Σ_j exp(i⟨z_j, x − y⟩); retorna a parte real."""
    x = np.asarray(x, dtype=np.float64).ravel()
    y = np.asarray(y, dtype=np.float64).ravel()
    if x.shape != y.shape or x.size != basis.d:
        raise ValidationError(f"Dimensões incompatíveis: {x.shape}, {y.shape}, d={basis.d}")
    estimate = _mc_estimate(basis, x, y)
    if abs(estimate.imag) > IMAG_TOL:
        logger.warning(f"Parte imaginária {estimate.imag:.3e} descartada na estimativa do kernel")
    return float(estimate.real)


def _mc_estimate(basis: FourierBasis, x: np.ndarray, y: np.ndarray) -> complex:
    return complex(np.mean(np.exp(1j * (basis.Z @ (x - y)))))


def kernel_convergence(spec: KernelSpec, k_list: list[int], n_pairs: int, d: int,
                       seed: int) -> list[tuple[int, float]]:
    """Erro absoluto médio da estimativa RFF contra o kernel exato, para cada K."""
    if n_pairs < 1 or d < 1 or not k_list:
        raise ValidationError("n_pairs, d e k_list devem ser positivos/não vazios")
    rng = make_rng(seed, 0)
    xs = rng.normal(0.0, spec.sigma, size=(n_pairs, d))
    ys = xs + rng.normal(0.0, spec.sigma / np.sqrt(d), size=(n_pairs, d))
    kernel = KernelFactory.get_kernel(spec)
    exact = np.array([kernel.evaluate(x, y) for x, y in zip(xs, ys)])
    results = []
    for index, K in enumerate(k_list):
        basis = FourierBasis(sample_frequencies(spec, K, d, seed + 1 + index), spec, seed + 1 + index)
        estimates = np.array([_mc_estimate(basis, x, y) for x, y in zip(xs, ys)])
        discarded = float(np.max(np.abs(estimates.imag)))
        if discarded > IMAG_TOL:
            logger.warning(f"K={K}: parte imaginária até {discarded:.3e} descartada nas estimativas")
        approx = estimates.real
        error = float(np.mean(np.abs(approx - exact)))
        logger.info(f"K={K}: erro médio {error:.4e}")
        results.append((K, error))
    return results


class RFFBuilder(FeatureBuilder):
    """Amostra frequências e avalia as features em todas as colunas de X e Y."""

    def build(self, snapshots: SnapshotSet, K: int, kernel: Optional[KernelSpec],
              seed: int) -> tuple[FeatureMatrices, FourierBasis]:
        kernel = self._require_kernel(kernel, K)
        basis = FourierBasis(sample_frequencies(kernel, K, snapshots.d, seed), kernel, seed)
        return self.from_basis(snapshots, basis), basis

    @staticmethod
    def from_basis(snapshots: SnapshotSet, basis: FourierBasis) -> FeatureMatrices:
        logger.info(f"Avaliando {basis.n_features} features de Fourier em {snapshots.M} pares")
        return FeatureMatrices(rff_evaluate(basis, snapshots.X), rff_evaluate(basis, snapshots.Y))
