from __future__ import annotations

from dataclasses import dataclass

from ..utils.errors import ValidationError


@dataclass(frozen=True)
class FNConfig:
    """Parâmetros do sistema de Fitzhugh–Nagumo 1-D e da geração de snapshots.

    v_t = v_xx + v − w − v³
    w_t = δ·w_xx + ε(v − c1·w − c0)

    em x ∈ [0, L] com `nx` pontos e fluxo nulo nas bordas.
    """

    nx: int = 100
    L: float = 20.0
    c0: float = -0.03
    c1: float = 2.0
    delta: float = 4.0
    epsilon: float = 0.02
    dt_snap: float = 1.0
    inner_dt: float = 0.004
    n_snapshots: int = 2500
    perturb_every: int = 25
    perturb_amp: float = 0.2
    seed: int = 0
    burn_in: float = 50.0
    n_bumps: int = 5

    DIVISIBILITY_TOL = 1e-9

    def __post_init__(self):
        if self.nx < 3:
            raise ValidationError(f"nx deve ser ≥ 3, recebido {self.nx}")
        if not self.L > 0:
            raise ValidationError(f"L deve ser positivo, recebido {self.L}")
        if not (self.dt_snap > 0 and self.inner_dt > 0):
            raise ValidationError("dt_snap e inner_dt devem ser positivos")
        ratio = self.dt_snap / self.inner_dt
        if abs(ratio - round(ratio)) > self.DIVISIBILITY_TOL * ratio:
            raise ValidationError(
                f"inner_dt={self.inner_dt} não divide dt_snap={self.dt_snap}")
        bound = self.dx ** 2 / (2.0 * max(1.0, self.delta))
        if not self.inner_dt < bound:
            raise ValidationError(
                f"inner_dt={self.inner_dt} viola o limite de estabilidade {bound:.6g}")
        if self.perturb_every < 1:
            raise ValidationError(f"perturb_every deve ser ≥ 1, recebido {self.perturb_every}")
        if self.perturb_amp < 0 or self.burn_in < 0 or self.n_bumps < 0:
            raise ValidationError("perturb_amp, burn_in e n_bumps não podem ser negativos")

    @property
    def dx(self) -> float:
        return self.L / (self.nx - 1)

    @property
    def substeps(self) -> int:
        """Passos internos por intervalo de snapshot."""
        return int(round(self.dt_snap / self.inner_dt))

    @property
    def bump_width(self) -> float:
        return self.L / 10.0
