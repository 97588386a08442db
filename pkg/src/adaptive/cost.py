from __future__ import annotations

from dataclasses import asdict, dataclass

from ..utils.errors import ValidationError


def _ratio(batch: float, incremental: float) -> float:
    if incremental == 0:
        return 1.0 if batch == 0 else float("inf")
    return batch / incremental


@dataclass(frozen=True)
class UpdateCost:
    """Contagens assintóticas (termos dominantes) da atualização incremental contra o lote."""

    K0: int
    Knew: int
    M: int
    gram_incremental: float
    gram_batch: float
    pinv_incremental: float
    pinv_batch: float
    product: float

    @property
    def gram_saving(self) -> float:
        return _ratio(self.gram_batch, self.gram_incremental)

    @property
    def pinv_saving(self) -> float:
        return _ratio(self.pinv_batch, self.pinv_incremental)

    @property
    def total_saving(self) -> float:
        return _ratio(self.gram_batch + self.pinv_batch + self.product,
                      self.gram_incremental + self.pinv_incremental + self.product)

    def as_dict(self) -> dict:
        out = asdict(self)
        out.update(gram_saving=self.gram_saving, pinv_saving=self.pinv_saving,
                   total_saving=self.total_saving)
        return out


def update_cost_report(K0: int, Knew: int, M: int) -> UpdateCost:
    """Gram/cross-Gram: 2·K0·Knew·M + Knew²·M (incremental) contra (K0+Knew)²·M (lote);
    G†: K0²·Knew contra (K0+Knew)³; o produto final G† H custa (K0+Knew)³ nos dois casos.
    """
    if min(K0, Knew, M) < 0:
        raise ValidationError(f"Tamanhos devem ser não negativos: K0={K0}, Knew={Knew}, M={M}")
    K = K0 + Knew
    return UpdateCost(
        K0=K0, Knew=Knew, M=M,
        gram_incremental=float(2 * K0 * Knew * M + Knew ** 2 * M),
        gram_batch=float(K ** 2 * M),
        pinv_incremental=float(K0 ** 2 * Knew + Knew ** 3),
        pinv_batch=float(K ** 3),
        product=float(K ** 3),
    )
