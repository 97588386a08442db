"""Ajuste de inclinações log–log e previsões assintóticas por fase."""
from __future__ import annotations

import numpy as np

from .harness import BenchCase, BenchResult
from ..utils.errors import ValidationError

AXES = ("K", "M", "d")
MIN_TIME = 1e-9

# Expoentes dominantes de (K, M, d) no regime K ≪ d, M.
PREDICTED_SLOPES: dict[tuple[str, str], dict[str, float]] = {
    ("nystrom_cheap", "basis"): {"K": 2, "M": 0, "d": 1},
    ("nystrom_cheap", "koopman"): {"K": 3, "M": 0, "d": 0},
    ("nystrom_cheap", "eigen"): {"K": 2, "M": 0, "d": 1},
    ("nystrom_cheap", "total"): {"K": 2, "M": 0, "d": 1},
    ("rff", "basis"): {"K": 1, "M": 1, "d": 1},
    ("rff", "koopman"): {"K": 2, "M": 1, "d": 0},
    ("rff", "eigen"): {"K": 1, "M": 1, "d": 1},
    ("rff", "total"): {"K": 1, "M": 1, "d": 1},
    ("nystrom_expensive", "basis"): {"K": 1, "M": 1, "d": 1},
    ("nystrom_expensive", "koopman"): {"K": 2, "M": 1, "d": 0},
    ("nystrom_expensive", "eigen"): {"K": 1, "M": 1, "d": 1},
    ("nystrom_expensive", "total"): {"K": 1, "M": 1, "d": 1},
}

DEFAULT_K = 50
M_GRID = (1000, 4000, 16000)
M_GRID_D = 1000
D_GRID = (250, 1000, 4000)
D_GRID_M = 2000
K_GRID = (25, 50, 100)
K_GRID_M = 4000
K_GRID_D = 1000
PATTERN = ((250, 16000), (1000, 4000), (4000, 1000))


def predicted_slope(method: str, phase: str, axis: str) -> float:
    """Inclinação prevista; no padrão de referência K·M·d é constante e M ∝ 1/d."""
    exponents = PREDICTED_SLOPES[(method, phase)]
    if axis == "pattern":
        return float(exponents["d"] - exponents["M"])
    return float(exponents[axis])


def fit_scaling(results: list[BenchResult], axis: str, phase: str, strict: bool = True) -> float:
    """Inclinação de mínimos quadrados de log(tempo) contra log(valor do eixo).

    Com strict=True os demais eixos devem ser constantes.
    """
    if axis not in AXES:
        raise ValidationError(f"Eixo desconhecido: {axis}")
    if len(results) < 3:
        raise ValidationError(f"São necessários ao menos 3 resultados, recebido {len(results)}")
    values = np.array([getattr(r.case, axis) for r in results], dtype=np.float64)
    if np.any(values <= 0) or len(np.unique(values)) < 2:
        raise ValidationError(f"Valores degenerados no eixo {axis}: {values.tolist()}")
    if strict:
        for other in AXES:
            if other != axis and len({getattr(r.case, other) for r in results}) > 1:
                raise ValidationError(f"Eixo {other} varia junto com {axis}")
    times = np.maximum([r.phase(phase) for r in results], MIN_TIME)
    slope, _ = np.polyfit(np.log(values), np.log(times), 1)
    return float(slope)


def grid_cases(method: str, axis: str, repeats: int = 3, seed: int = 0,
               k_values=None, m_values=None, d_values=None) -> list[BenchCase]:
    """Casos padrão (ou sobrescritos) variando apenas `axis`."""
    if axis == "M":
        return [BenchCase(method, (k_values or [DEFAULT_K])[0], M, (d_values or [M_GRID_D])[0],
                          repeats, seed) for M in (m_values or M_GRID)]
    if axis == "d":
        return [BenchCase(method, (k_values or [DEFAULT_K])[0], (m_values or [D_GRID_M])[0], d,
                          repeats, seed) for d in (d_values or D_GRID)]
    if axis == "K":
        return [BenchCase(method, K, (m_values or [K_GRID_M])[0], (d_values or [K_GRID_D])[0],
                          repeats, seed) for K in (k_values or K_GRID)]
    if axis == "pattern":
        return reference_pattern(method, repeats, seed)
    raise ValidationError(f"Eixo desconhecido: {axis}")


def reference_pattern(method: str, repeats: int = 3, seed: int = 0) -> list[BenchCase]:
    """Três casos com K·M·d constante: (d, M) ∈ {(250, 16000), (1000, 4000), (4000, 1000)}."""
    return [BenchCase(method, DEFAULT_K, M, d, repeats, seed) for d, M in PATTERN]
