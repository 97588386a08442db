"""Geração do conjunto de snapshots de Fitzhugh–Nagumo com forçamento aleatório."""
from __future__ import annotations

from dataclasses import asdict

import numpy as np

from .config import FNConfig
from .solver import FNState, fn_run
from ..data.snapshots import SnapshotSet
from ..utils.errors import InsufficientDataError
from ..utils.logger import get_logger
from ..utils.rng import make_rng

logger = get_logger("fnsim")

PERTURBATION_LAW = "soma de n_bumps gaussianas, centros ~ U[0, L], largura L/10, amplitude perturb_amp·N(0, 1)"


def grid(cfg: FNConfig) -> np.ndarray:
    return np.linspace(0.0, cfg.L, cfg.nx)


def front_state(cfg: FNConfig) -> FNState:
    """Frente tipo tanh centrada em L/2, com w no equilíbrio local."""
    v = np.tanh(grid(cfg) - cfg.L / 2.0)
    return FNState(v, (v - cfg.c0) / cfg.c1, 0.0)


def gaussian_bumps(cfg: FNConfig, rng: np.random.Generator) -> np.ndarray:
    x = grid(cfg)
    centers = rng.uniform(0.0, cfg.L, size=cfg.n_bumps)
    amplitudes = cfg.perturb_amp * rng.standard_normal(cfg.n_bumps)
    profile = np.exp(-0.5 * ((x[:, None] - centers[None, :]) / cfg.bump_width) ** 2)
    return profile @ amplitudes


def generate_dataset(cfg: FNConfig) -> SnapshotSet:
    """Registra pares (v_j, v_{j+1}) a cada dt_snap após o burn-in.

    A perturbação entra depois do registro de Y_j, portanto todo par
    respeita a dinâmica não forçada; quando um par não é perturbado,
    X_{j+1} = Y_j.
    """
    if cfg.n_snapshots < 1:
        raise InsufficientDataError(f"n_snapshots deve ser ≥ 1, recebido {cfg.n_snapshots}")
    rng = make_rng(cfg.seed)
    state = fn_run(front_state(cfg), cfg, int(round(cfg.burn_in / cfg.inner_dt)))
    logger.info(f"Burn-in concluído (t={state.t:.3g}); gerando {cfg.n_snapshots} pares")

    X = np.empty((cfg.nx, cfg.n_snapshots))
    Y = np.empty((cfg.nx, cfg.n_snapshots))
    for j in range(cfg.n_snapshots):
        X[:, j] = state.v
        state = fn_run(state, cfg, cfg.substeps)
        Y[:, j] = state.v
        if cfg.perturb_amp > 0 and (j + 1) % cfg.perturb_every == 0:
            state = FNState(state.v + gaussian_bumps(cfg, rng), state.w, state.t)
    logger.info(f"Dataset FN: d={cfg.nx}, M={cfg.n_snapshots}, max|v|={np.max(np.abs(Y)):.3g}")
    return SnapshotSet.from_pairs(X, Y, cfg.dt_snap)


def dataset_metadata(cfg: FNConfig) -> dict:
    meta = asdict(cfg)
    meta.update(dx=cfg.dx, bump_width=cfg.bump_width, perturbation=PERTURBATION_LAW,
                initial_condition="tanh(x − L/2), w = (v − c0)/c1")
    return meta
