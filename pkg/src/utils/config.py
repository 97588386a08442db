"""Configuração de processo lida do ambiente."""
from __future__ import annotations

import os
from dataclasses import dataclass

_BLAS_THREAD_VARS = ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS")


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError:
        return default
    return value if value > 0 else default


@dataclass(frozen=True)
class Settings:
    """Parâmetros de execução (threads, log, orçamento de memória)."""

    threads: int
    log_level: str
    memory_budget: int

    DEFAULT_MEMORY_BUDGET = 2 * 1024 ** 3

    @classmethod
    def from_env(cls) -> "Settings":
        return cls(
            threads=_env_int("KOOPMAN_THREADS", os.cpu_count() or 1),
            log_level=os.environ.get("KOOPMAN_LOG_LEVEL", "INFO").upper(),
            memory_budget=_env_int("KOOPMAN_MEMORY_BUDGET", cls.DEFAULT_MEMORY_BUDGET),
        )


def apply_thread_limits() -> None:
    """Propaga KOOPMAN_THREADS para as bibliotecas BLAS (antes do import do numpy)."""
    raw = os.environ.get("KOOPMAN_THREADS")
    if not raw or _env_int("KOOPMAN_THREADS", 0) == 0:
        return
    for var in _BLAS_THREAD_VARS:
        os.environ.setdefault(var, str(int(raw)))
