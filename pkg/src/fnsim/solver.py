"""Integração explícita (Euler) com diferenças centrais e pontos fantasmas de Neumann."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import FNConfig
from ..utils.errors import InstabilityError, ValidationError

CHECK_EVERY = 100


@dataclass(frozen=True, eq=False)
class FNState:
    v: np.ndarray
    w: np.ndarray
    t: float = 0.0

    def __post_init__(self):
        v = np.asarray(self.v, dtype=np.float64)
        w = np.asarray(self.w, dtype=np.float64)
        if v.ndim != 1 or v.shape != w.shape:
            raise ValidationError(f"v {v.shape} e w {w.shape} devem ser vetores do mesmo tamanho")
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "w", w)


def laplacian(u: np.ndarray, dx: float) -> np.ndarray:
    """u_xx com fluxo nulo: o ponto fantasma espelha o vizinho interior."""
    out = np.empty_like(u)
    out[1:-1] = (u[:-2] + u[2:]) - 2.0 * u[1:-1]
    out[0] = 2.0 * (u[1] - u[0])
    out[-1] = 2.0 * (u[-2] - u[-1])
    return out / (dx * dx)


def _rhs(v: np.ndarray, w: np.ndarray, cfg: FNConfig) -> tuple[np.ndarray, np.ndarray]:
    dv = laplacian(v, cfg.dx) + v - w - v ** 3
    dw = cfg.delta * laplacian(w, cfg.dx) + cfg.epsilon * (v - cfg.c1 * w - cfg.c0)
    return dv, dw


def _finite(v: np.ndarray, w: np.ndarray) -> bool:
    return bool(np.all(np.isfinite(v)) and np.all(np.isfinite(w)))


def _euler(v: np.ndarray, w: np.ndarray, cfg: FNConfig, n_steps: int) -> tuple[np.ndarray, np.ndarray]:
    h = cfg.inner_dt
    for _ in range(n_steps):
        dv, dw = _rhs(v, w, cfg)
        v = v + h * dv
        w = w + h * dw
    return v, w


def _advance(v: np.ndarray, w: np.ndarray, cfg: FNConfig, n_steps: int,
             first_step: int) -> tuple[np.ndarray, np.ndarray]:
    """Integra em blocos de CHECK_EVERY passos; um bloco com NaN/Inf é refeito passo a passo."""
    done = 0
    with np.errstate(over="ignore", invalid="ignore"):
        while done < n_steps:
            chunk = min(CHECK_EVERY, n_steps - done)
            v_next, w_next = _euler(v, w, cfg, chunk)
            if not _finite(v_next, w_next):
                for k in range(chunk):
                    v, w = _euler(v, w, cfg, 1)
                    if not _finite(v, w):
                        raise InstabilityError("Integração produziu NaN/Inf", first_step + done + k)
            v, w = v_next, w_next
            done += chunk
    return v, w


def _step_index(state: FNState, cfg: FNConfig) -> int:
    return int(round(state.t / cfg.inner_dt))


def fn_step(state: FNState, cfg: FNConfig) -> FNState:
    """Avança um passo de `cfg.inner_dt`."""
    if state.v.shape != (cfg.nx,):
        raise ValidationError(f"Estado com {state.v.shape[0]} pontos, configuração com nx={cfg.nx}")
    v, w = _advance(state.v, state.w, cfg, 1, _step_index(state, cfg))
    return FNState(v, w, state.t + cfg.inner_dt)


def fn_run(state: FNState, cfg: FNConfig, n_steps: int) -> FNState:
    """Avança `n_steps` passos; InstabilityError aponta o primeiro passo não finito."""
    if state.v.shape != (cfg.nx,):
        raise ValidationError(f"Estado com {state.v.shape[0]} pontos, configuração com nx={cfg.nx}")
    if n_steps < 0:
        raise ValidationError(f"n_steps deve ser não negativo, recebido {n_steps}")
    v, w = _advance(state.v, state.w, cfg, n_steps, _step_index(state, cfg))
    return FNState(v, w, state.t + n_steps * cfg.inner_dt)
