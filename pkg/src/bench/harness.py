"""Medição de tempo por fase (base, matriz de Koopman, autoespectro)."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..data.snapshots import SnapshotSet
from ..edmd.gram import build_gram
from ..edmd.koopman import koopman_matrix
from ..edmd.spectrum import spectrum
from ..features.factory import build_feature_matrices
from ..kernels import KernelSpec
from ..utils.config import Settings
from ..utils.errors import MemoryBudgetError, ValidationError
from ..utils.logger import get_logger
from ..utils.rng import make_rng

logger = get_logger("bench")

BENCH_METHODS = ("rff", "nystrom_cheap", "nystrom_expensive")
PHASES = ("basis", "koopman", "eigen")
N_LEADING = 4


@dataclass(frozen=True)
class BenchCase:
    method: str
    K: int
    M: int
    d: int
    repeats: int = 3
    seed: int = 0

    def __post_init__(self):
        method = self.method.replace("-", "_").lower()
        if method not in BENCH_METHODS:
            raise ValidationError(f"Método de benchmark não suportado: {self.method}")
        object.__setattr__(self, "method", method)
        if min(self.K, self.M, self.d) < 1:
            raise ValidationError(f"K, M e d devem ser positivos: K={self.K}, M={self.M}, d={self.d}")
        if method.startswith("nystrom") and self.K > self.M:
            raise ValidationError(f"Nyström exige K ≤ M (K={self.K}, M={self.M})")
        if self.repeats < 1:
            raise ValidationError(f"repeats deve ser ≥ 1, recebido {self.repeats}")

    @property
    def memory_estimate(self) -> int:
        """Bytes de K·M + M·d + K² entradas complexas."""
        return 16 * (self.K * self.M + self.M * self.d + self.K * self.K)


@dataclass(frozen=True, eq=False)
class BenchResult:
    """Medianas por fase (segundos) sobre as repetições, sem contar o aquecimento."""

    case: BenchCase
    basis: float
    koopman: float
    eigen: float
    total: float
    memory_estimate: int
    leading_eigs: np.ndarray = field(default_factory=lambda: np.empty(0, dtype=np.complex128))

    def phase(self, name: str) -> float:
        if name not in PHASES + ("total",):
            raise ValidationError(f"Fase desconhecida: {name}")
        return float(getattr(self, name))


def synthetic_snapshots(case: BenchCase) -> SnapshotSet:
    """Trajetória normal padrão d × (M+1); a dinâmica não afeta o tempo."""
    trajectory = make_rng(case.seed).standard_normal((case.d, case.M + 1))
    return SnapshotSet.from_trajectory(trajectory, 1.0)


def _timed_run(case: BenchCase, snapshots: SnapshotSet, kernel: KernelSpec) -> tuple[dict, np.ndarray]:
    times = {}
    t0 = time.perf_counter()
    psi, _ = build_feature_matrices(case.method, snapshots, case.K, kernel, case.seed + 1)
    t1 = time.perf_counter()
    A = koopman_matrix(build_gram(psi))
    t2 = time.perf_counter()
    dec = spectrum(A, psi, snapshots)
    t3 = time.perf_counter()
    times.update(basis=t1 - t0, koopman=t2 - t1, eigen=t3 - t2, total=t3 - t0)
    return times, dec.mu[:N_LEADING]


def run_case(case: BenchCase, settings: Optional[Settings] = None) -> BenchResult:
    """Executa o pipeline uma vez para aquecimento e `repeats` vezes medidas."""
    settings = settings or Settings.from_env()
    estimate = case.memory_estimate
    if estimate > settings.memory_budget:
        raise MemoryBudgetError(
            f"Caso {case.method} K={case.K} M={case.M} d={case.d} exige ~{estimate} bytes, "
            f"orçamento {settings.memory_budget}", estimate)
    snapshots = synthetic_snapshots(case)
    kernel = KernelSpec("gaussian", float(np.sqrt(case.d)))

    _timed_run(case, snapshots, kernel)
    runs = [_timed_run(case, snapshots, kernel) for _ in range(case.repeats)]
    medians = {name: float(np.median([r[0][name] for r in runs])) for name in PHASES + ("total",)}
    logger.info(f"{case.method} K={case.K} M={case.M} d={case.d}: "
                + ", ".join(f"{k}={v:.4f}s" for k, v in medians.items()))
    return BenchResult(case=case, memory_estimate=estimate, leading_eigs=runs[-1][1], **medians)


def run_cases(cases: list[BenchCase], settings: Optional[Settings] = None) -> list[BenchResult]:
    """Casos em sequência para não haver interferência entre medições."""
    settings = settings or Settings.from_env()
    return [run_case(case, settings) for case in cases]
