from __future__ import annotations

from typing import Optional

import numpy as np
import scipy.linalg

from .linalg import DEFAULT_RCOND
from .spectrum import KoopmanDecomposition, assemble_decomposition
from ..data.snapshots import SnapshotSet
from ..utils.errors import DegenerateDataError, ValidationError
from ..utils.logger import get_logger

logger = get_logger("edmd")


def dmd(snapshots: SnapshotSet, rank: Optional[int] = None, n_modes: Optional[int] = None,
        rcond: float = DEFAULT_RCOND) -> KoopmanDecomposition:
    """DMD exato via SVD truncada de X.

    Ã = U^H Y V Σ^{-1}; modos Φ = Y V Σ^{-1} w / μ (convenção do DMD exato),
    caindo para os modos projetados U w quando μ = 0.
    """
    X, Y = snapshots.X, snapshots.Y
    max_rank = min(X.shape)
    U, s, Vh = scipy.linalg.svd(X, full_matrices=False)
    if not s[0] > 0:
        raise DegenerateDataError("Matriz de snapshots X identicamente nula")
    if rank is None:
        rank = int(np.count_nonzero(s > rcond * s[0]))
    elif not 1 <= rank <= max_rank:
        raise ValidationError(f"rank deve estar entre 1 e {max_rank}, recebido {rank}")
    U_r, s_r, V_r = U[:, :rank], s[:rank], Vh[:rank].conj().T
    B = (Y @ V_r) / s_r[None, :]
    Atilde = U_r.conj().T @ B
    mu, w = scipy.linalg.eig(Atilde)
    projected = U_r @ w
    exact = B @ w
    nonzero = np.abs(mu) > np.finfo(np.float64).eps
    raw = np.where(nonzero[None, :], exact / np.where(nonzero, mu, 1.0)[None, :], projected)
    logger.info(f"DMD: posto {rank} de {max_rank}, d={snapshots.d}, M={snapshots.M}")
    return assemble_decomposition(Atilde, mu, w, raw, snapshots.dt, n_modes, "dmd")
