from __future__ import annotations
import argparse
from pathlib import Path

import numpy as np

from ..base import Command, console, require_nonnegative
from ..manifest import RunManifest
from ..model import (BASIS_DIR, FitOutcome, read_model, state_from_model, write_json,
                     write_model)
from .fit import eigen_table
from ...adaptive import extend, update_cost_report
from ...data.sidecar import file_sha256
from ...data.snapshots import SnapshotSet, load_snapshots
from ...edmd import eigenfunction_residuals, spectrum
from ...features import FourierBasis, load_basis, rff_evaluate
from ...features.fourier import RFFBuilder
from ...kernels import sample_frequencies
from ...utils.errors import UnsupportedMethodError, ValidationError
from ...utils.logger import get_logger

logger = get_logger("cli")

COST_REPORT = "cost_report.json"


def _load_training_data(meta: dict) -> SnapshotSet:
    ds = meta["dataset"]
    for key_path, key_hash in (("path", "sha256"), ("y_path", "y_sha256")):
        if ds.get(key_path) is None:
            continue
        if not Path(ds[key_path]).exists():
            raise ValidationError(f"Dataset do modelo não encontrado: {ds[key_path]}")
        if file_sha256(ds[key_path]) != ds[key_hash]:
            raise ValidationError(f"Dataset alterado desde o ajuste: {ds[key_path]}")
    return load_snapshots(Path(ds["path"]), ds["dt"],
                          None if ds.get("y_path") is None else Path(ds["y_path"]))


class ExtendCommand(Command):
    """Acrescenta K_new frequências a um modelo rff sem recalcular G e H do zero."""

    name = "extend"
    help = "Estende um modelo rff com novas features"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--model", required=True, help="Diretório gravado por `fit`")
        parser.add_argument("--k-new", type=int, required=True, help="Número de novas features")
        parser.add_argument("--seed", type=int, default=None,
                            help="Semente das novas frequências (padrão: semente do modelo + K0)")
        parser.add_argument("--out", default=None, help="Diretório de saída (padrão: o próprio modelo)")

    def run(self, args: argparse.Namespace, argv: list[str]) -> int:
        model_dir = Path(args.model)
        meta = read_model(model_dir)
        if meta.get("method") != "rff":
            raise UnsupportedMethodError(
                f"extend é definido apenas para modelos rff, modelo é {meta.get('method')}")
        k_new = require_nonnegative("k-new", args.k_new)

        snapshots = _load_training_data(meta)
        basis = load_basis(model_dir / BASIS_DIR)
        state = state_from_model(model_dir, RFFBuilder.from_basis(snapshots, basis), meta["rcond"])
        K0 = basis.n_features
        seed = args.seed if args.seed is not None else int(meta["seed"]) + K0

        if k_new > 0:
            Z_new = sample_frequencies(basis.kernel, k_new, basis.d, seed)
            new_features = FourierBasis(Z_new, basis.kernel, seed)
            PsiX_new = rff_evaluate(new_features, snapshots.X)
            PsiY_new = rff_evaluate(new_features, snapshots.Y)
            basis = basis.extended(Z_new)
        else:
            PsiX_new = PsiY_new = np.empty((snapshots.M, 0), dtype=np.complex128)
        state = extend(state, PsiX_new, PsiY_new)

        psi = state.features
        dec = spectrum(state.A, psi, snapshots, n_modes=meta.get("n_modes"), rcond=meta["rcond"],
                       method="rff")
        outcome = FitOutcome(dec, basis, psi, state, eigenfunction_residuals(dec, psi))
        cost = update_cost_report(K0, k_new, snapshots.M)
        meta = dict(meta, K=basis.n_features,
                    extensions=list(meta.get("extensions", [])) + [{"k_new": k_new, "seed": seed}])

        out_dir = Path(args.out) if args.out else model_dir
        written = write_model(out_dir, meta, outcome, snapshots)
        written.append(write_json(out_dir / COST_REPORT, cost.as_dict()))
        manifest = RunManifest(self.name, dict(meta, model=str(model_dir)), argv)
        manifest.add_outputs(out_dir, written)
        manifest.write(out_dir)
        if state.fallback:
            logger.warning("G† recalculada em lote; veja penrose_residual em summary.json")
        console.print(f"Modelo estendido: K {K0} → {basis.n_features}, "
                      f"economia estimada na Gram {cost.gram_saving:.3g}x")
        console.print(eigen_table(dec, "Autovalores líderes após extensão"))
        return 0
