"""Autodecomposição da matriz de Koopman: autovalores, autofunções e modos."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
import scipy.linalg

from ..data.snapshots import SnapshotSet
from ..features.base import Basis, FeatureMatrices
from ..utils.errors import ValidationError
from ..utils.logger import get_logger
from .linalg import DEFAULT_RCOND

logger = get_logger("edmd")

CONJUGATE_TOL = 1e-8
EIG_RESIDUAL_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class KoopmanDecomposition:
    """Autopares (μ_i, ξ_i) e modos v_i de uma matriz de Koopman.

    Ordem: |Re(ln μ / dt)| crescente, pares conjugados adjacentes. `modes` é
    normalizado por fase (maior componente real positiva); `phases` guarda
    o fator aplicado e `order` os índices na autodecomposição bruta.
    """

    A: np.ndarray
    mu: np.ndarray
    xi: np.ndarray
    modes: np.ndarray
    dt: float
    cont_eigs: np.ndarray
    phases: np.ndarray
    order: np.ndarray
    eig_residual: float = 0.0
    defective: bool = False
    method: str = "edmd"

    @property
    def n_modes(self) -> int:
        return len(self.mu)

    @property
    def raw_modes(self) -> np.ndarray:
        return self.modes * np.conj(self.phases)[None, :]


def continuous_eigs(mu: np.ndarray, dt: float) -> np.ndarray:
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.log(mu.astype(np.complex128)) / dt


def order_eigenvalues(mu: np.ndarray, dt: float, tol: float = CONJUGATE_TOL) -> list[list[int]]:
    """Agrupa pares conjugados e ordena os grupos por |Re(ln μ / dt)| crescente."""
    key = np.abs(continuous_eigs(mu, dt).real)
    key = np.where(np.isnan(key), np.inf, key)
    available = np.ones(len(mu), dtype=bool)
    groups: list[list[int]] = []
    for i in np.argsort(key, kind="stable"):
        if not available[i]:
            continue
        available[i] = False
        scale = tol * max(1.0, abs(mu[i]))
        group = [int(i)]
        if abs(mu[i].imag) > scale:
            gap = np.where(available, np.abs(mu - np.conj(mu[i])), np.inf)
            j = int(np.argmin(gap)) if len(gap) else -1
            if j >= 0 and gap[j] <= scale:
                available[j] = False
                group = [int(i), j] if mu[i].imag > 0 else [j, int(i)]
        groups.append(group)
    return groups


def _select(groups: list[list[int]], n_modes: Optional[int]) -> np.ndarray:
    selected: list[int] = []
    for group in groups:
        if n_modes is not None and len(selected) >= n_modes:
            break
        selected.extend(group)
    return np.asarray(selected, dtype=np.intp)


def _phase_normalize(raw: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    phases = np.ones(raw.shape[1], dtype=np.complex128)
    if raw.shape[0]:
        peak = raw[np.argmax(np.abs(raw), axis=0), np.arange(raw.shape[1])]
        nonzero = np.abs(peak) > 0
        phases[nonzero] = np.conj(peak[nonzero]) / np.abs(peak[nonzero])
    return raw * phases[None, :], phases


def assemble_decomposition(A: np.ndarray, mu: np.ndarray, xi: np.ndarray, raw_modes: np.ndarray,
                           dt: float, n_modes: Optional[int], method: str) -> KoopmanDecomposition:
    """Ordena, seleciona e normaliza uma autodecomposição bruta."""
    if n_modes is not None and n_modes < 1:
        raise ValidationError(f"n_modes deve ser positivo, recebido {n_modes}")
    norm_A = np.linalg.norm(A)
    residual = 0.0
    if xi.size and norm_A > 0:
        residual = float(np.max(np.linalg.norm(A @ xi - xi * mu[None, :], axis=0)) / norm_A)
    defective = residual > EIG_RESIDUAL_TOL or (xi.size > 0 and np.linalg.cond(xi) > 1e12)
    if defective:
        logger.warning(f"Matriz possivelmente defectiva (resíduo {residual:.2e})")
    order = _select(order_eigenvalues(mu, dt), n_modes)
    modes, phases = _phase_normalize(raw_modes[:, order])
    return KoopmanDecomposition(A=A, mu=mu[order], xi=xi[:, order], modes=modes, dt=dt,
                                cont_eigs=continuous_eigs(mu[order], dt), phases=phases,
                                order=order, eig_residual=residual, defective=bool(defective),
                                method=method)


def spectrum(A: np.ndarray, psi: FeatureMatrices, snapshots: SnapshotSet,
             n_modes: Optional[int] = None, rcond: float = DEFAULT_RCOND,
             method: str = "edmd") -> KoopmanDecomposition:
    """Autodecompõe A e reconstrói os modos de Koopman por mínimos quadrados X^T ≈ Φ V."""
    data = psi.snapshots_for(snapshots)
    if data.M != psi.M:
        raise ValidationError(f"Features com {psi.M} linhas e snapshots com M={data.M}")
    mu, xi = scipy.linalg.eig(A)
    Phi = psi.PsiX @ xi
    V = scipy.linalg.lstsq(Phi, data.X.T.astype(np.complex128), cond=rcond)[0]
    logger.info(f"Espectro: {len(mu)} autovalores, d={data.d}, M={data.M}")
    return assemble_decomposition(A, mu, xi, V.T, snapshots.dt, n_modes, method)


def eigenfunction_residuals(dec: KoopmanDecomposition, psi: FeatureMatrices) -> np.ndarray:
    """‖Ψ_Y ξ_i − μ_i Ψ_X ξ_i‖ / ‖Ψ_X ξ_i‖ por autopar; +∞ se a amostra da autofunção é nula."""
    phi_x = psi.PsiX @ dec.xi
    phi_y = psi.PsiY @ dec.xi
    num = np.linalg.norm(phi_y - phi_x * dec.mu[None, :], axis=0)
    den = np.linalg.norm(phi_x, axis=0)
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(den > 0, num / np.where(den > 0, den, 1.0), np.inf)


def eigenfunctions(dec: KoopmanDecomposition, basis: Basis, S: np.ndarray) -> np.ndarray:
    """Autofunções φ_i = Ψ(·) ξ_i avaliadas nas colunas de S; n × r."""
    return basis.evaluate(S) @ dec.xi


def predict(dec: KoopmanDecomposition, basis: Basis, x0: np.ndarray, steps: int) -> np.ndarray:
    """Trajetória x_k ≈ Re Σ_i μ_i^k φ_i(x0) v_i para k = 0..steps; d × (steps+1)."""
    if steps < 0:
        raise ValidationError(f"steps deve ser não negativo, recebido {steps}")
    phi0 = eigenfunctions(dec, basis, np.asarray(x0, dtype=np.float64).reshape(-1, 1))[0]
    powers = dec.mu[None, :] ** np.arange(steps + 1)[:, None]
    return np.real(dec.raw_modes @ (powers * phi0[None, :]).T)
