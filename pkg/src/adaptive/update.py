"""Atualização da matriz de Koopman ao acrescentar features (Gram e pseudoinversa em blocos).

G = [[G0, G1], [G1^H, G2]], Q = G2 − G1^H G0† G1 e

    G† = [[G0† + G0† G1 Q† G1^H G0†, −G0† G1 Q†],
          [−Q† G1^H G0†,              Q†        ]]

válido quando posto(G) = posto(G0) + posto(G2), o que vale se as novas
features são linearmente independentes das antigas.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from ..edmd.gram import GramPair, build_gram
from ..edmd.linalg import DEFAULT_RCOND, hermitian_pinv, penrose_residuals
from ..features.base import FeatureMatrices
from ..utils.errors import DegenerateDataError, ValidationError
from ..utils.logger import get_logger

logger = get_logger("adaptive")

PENROSE_TOL = 1e-9
FALLBACK_TOL = 1e-6


@dataclass(frozen=True, eq=False)
class AdaptiveState:
    """Features atuais, G, H, G† armazenada e A = G† H."""

    PsiX: np.ndarray
    PsiY: np.ndarray
    gram: GramPair
    Ginv: np.ndarray
    A: np.ndarray
    rcond: float = DEFAULT_RCOND
    fallback: bool = False
    penrose_residual: float = 0.0

    @property
    def K(self) -> int:
        return self.PsiX.shape[1]

    @property
    def features(self) -> FeatureMatrices:
        return FeatureMatrices(self.PsiX, self.PsiY)

    @classmethod
    def from_features(cls, psi: FeatureMatrices, rcond: float = DEFAULT_RCOND) -> "AdaptiveState":
        """Estado inicial calculado em lote."""
        gram = build_gram(psi)
        Ginv = hermitian_pinv(gram.G, rcond)
        return cls(psi.PsiX, psi.PsiY, gram, Ginv, Ginv @ gram.H, rcond)


def _block_pinv(G0inv: np.ndarray, G1: np.ndarray, G2: np.ndarray, rcond: float) -> np.ndarray:
    B = G0inv @ G1
    Q = G2 - G1.conj().T @ B
    Q = 0.5 * (Q + Q.conj().T)
    Qinv = hermitian_pinv(Q, rcond)
    BQ = B @ Qinv
    return np.block([[G0inv + BQ @ B.conj().T, -BQ],
                     [-BQ.conj().T, Qinv]])


def _refine(G: np.ndarray, Ginv: np.ndarray) -> np.ndarray:
    """Um passo de Newton–Schulz, P ← 2P − P G P; preserva o espaço truncado de P."""
    P = 2.0 * Ginv - Ginv @ G @ Ginv
    return 0.5 * (P + P.conj().T)


def penrose_tolerance(G: np.ndarray, Ginv: np.ndarray) -> float:
    """PENROSE_TOL, afrouxada até o piso de arredondamento K·eps·κ e limitada a FALLBACK_TOL."""
    kappa = np.linalg.norm(G) * np.linalg.norm(Ginv)
    floor = G.shape[0] * np.finfo(np.float64).eps * kappa
    return float(min(max(PENROSE_TOL, floor), FALLBACK_TOL))


def extend(state: AdaptiveState, PsiX_new: np.ndarray, PsiY_new: np.ndarray) -> AdaptiveState:
    """Acrescenta K_new colunas de features; só os blocos novos de G e H são calculados."""
    PsiX_new = np.asarray(PsiX_new)
    PsiY_new = np.asarray(PsiY_new)
    if PsiX_new.shape != PsiY_new.shape or PsiX_new.ndim != 2:
        raise ValidationError(f"Novas features incompatíveis: {PsiX_new.shape}, {PsiY_new.shape}")
    if PsiX_new.shape[0] != state.PsiX.shape[0]:
        raise ValidationError(
            f"Novas features com M={PsiX_new.shape[0]}, estado com M={state.PsiX.shape[0]}")
    if PsiX_new.shape[1] == 0:
        return state
    old_h = state.PsiX.conj().T
    new_h = PsiX_new.conj().T
    G1 = old_h @ PsiX_new
    G2 = new_h @ PsiX_new
    G2 = 0.5 * (G2 + G2.conj().T)
    G = np.block([[state.gram.G, G1], [G1.conj().T, G2]])
    H = np.block([[state.gram.H, old_h @ PsiY_new],
                  [new_h @ state.PsiY, new_h @ PsiY_new]])

    try:
        Ginv = _refine(G, _block_pinv(state.Ginv, G1, G2, state.rcond))
        residual = max(penrose_residuals(G, Ginv))
        fallback = not (np.all(np.isfinite(Ginv)) and residual <= penrose_tolerance(G, Ginv))
    except DegenerateDataError:
        residual, fallback = float("inf"), True
    if fallback:
        logger.warning(f"Condição de posto violada (resíduo de Penrose {residual:.2e}); "
                       f"recalculando G† em lote")
        Ginv = hermitian_pinv(G, state.rcond)
        residual = max(penrose_residuals(G, Ginv))
    logger.info(f"Extensão {state.K} → {G.shape[0]} features")
    return replace(state, PsiX=np.hstack([state.PsiX, PsiX_new]),
                   PsiY=np.hstack([state.PsiY, PsiY_new]), gram=GramPair(G, H), Ginv=Ginv,
                   A=Ginv @ H, fallback=state.fallback or fallback, penrose_residual=residual)
