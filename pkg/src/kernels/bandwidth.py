"""Heurística empírica de largura de banda: distância euclidiana média entre snapshots."""
from __future__ import annotations

import numpy as np

from ..utils.errors import DegenerateDataError, InsufficientDataError, ValidationError
from ..utils.logger import get_logger
from ..utils.rng import make_rng

logger = get_logger("kernels")

DEFAULT_MAX_PAIRS = 10_000


def _unrank_pairs(k: np.ndarray, M: int) -> tuple[np.ndarray, np.ndarray]:
    """Converte índices lineares do triângulo superior estrito em pares (i, j), i < j."""
    k = np.asarray(k, dtype=np.int64)
    i = M - 2 - np.floor(np.sqrt(-8.0 * k + 4.0 * M * (M - 1) - 7) / 2.0 - 0.5).astype(np.int64)
    j = k + i + 1 - M * (M - 1) // 2 + (M - i) * ((M - i) - 1) // 2
    return i, j


def sample_pairs(M: int, max_pairs: int, seed: int) -> tuple[np.ndarray, np.ndarray]:
    """Amostra min(max_pairs, M(M−1)/2) pares distintos de snapshots, uniformemente."""
    total = M * (M - 1) // 2
    if total <= max_pairs:
        i, j = np.triu_indices(M, k=1)
        return i.astype(np.int64), j.astype(np.int64)
    linear = np.sort(make_rng(seed).choice(total, size=max_pairs, replace=False))
    return _unrank_pairs(linear, M)


def mean_pair_distance(X: np.ndarray, i: np.ndarray, j: np.ndarray) -> float:
    """Distância euclidiana média entre as colunas X[:, i] e X[:, j]."""
    return float(np.mean(np.linalg.norm(X[:, i] - X[:, j], axis=0)))


def estimate_bandwidth(X: np.ndarray, max_pairs: int = DEFAULT_MAX_PAIRS, seed: int = 0) -> float:
    """Estima σ como a distância média sobre uma subamostra aleatória de pares de snapshots."""
    X = np.asarray(X, dtype=np.float64)
    if max_pairs < 1:
        raise ValidationError(f"max_pairs deve ser positivo, recebido {max_pairs}")
    if X.ndim != 2 or X.shape[1] < 2:
        raise InsufficientDataError("Estimativa de banda exige ao menos 2 snapshots")
    i, j = sample_pairs(X.shape[1], max_pairs, seed)
    sigma = mean_pair_distance(X, i, j)
    if not sigma > 0:
        raise DegenerateDataError("Todos os snapshots amostrados são idênticos (distância média 0)")
    logger.info(f"Banda estimada σ = {sigma:.6g} a partir de {len(i)} pares")
    return sigma
