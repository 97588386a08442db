from __future__ import annotations
import argparse
from pathlib import Path

from rich.table import Table

from ..base import Command, console, positive_int, sigma_value
from ..manifest import RunManifest
from ..model import (KERNEL_METHODS, dataset_entry, fit_pipeline, normalize_method,
                     resolve_kernel, write_model)
from ...data.sidecar import load_dataset, read_sidecar
from ...edmd import DEFAULT_RCOND, KoopmanDecomposition
from ...features.nystrom import DEFAULT_TRUNC_TOL
from ...kernels import FAMILIES
from ...kernels.bandwidth import DEFAULT_MAX_PAIRS
from ...utils.errors import ValidationError
from ...utils.logger import get_logger

logger = get_logger("cli")

METHOD_CHOICES = ["rff", "nystrom-cheap", "nystrom-expensive", "nystrom-partial", "dmd", "linear"]


def add_model_arguments(parser: argparse.ArgumentParser) -> None:
    """Flags comuns a `fit` e `compare`."""
    parser.add_argument("--in", dest="input", required=True, help="Snapshots (.kmx ou .csv)")
    parser.add_argument("--in-y", dest="input_y", default=None,
                        help="Arquivo Y explícito (senão o sidecar ou a trajetória)")
    parser.add_argument("--method", choices=METHOD_CHOICES, default="rff")
    parser.add_argument("--k", type=int, default=100, help="Número de features K")
    parser.add_argument("--kernel", choices=list(FAMILIES), default="gaussian")
    parser.add_argument("--sigma", type=sigma_value, default="auto", help="Banda σ ou 'auto'")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--dt", type=float, default=None,
                        help="Intervalo entre snapshots (padrão: sidecar, senão 1.0)")
    parser.add_argument("--rcond", type=float, default=DEFAULT_RCOND)
    parser.add_argument("--n-modes", type=positive_int, default=None)
    parser.add_argument("--n-interp", type=positive_int, default=None,
                        help="Pares interpolados (nystrom-partial)")
    parser.add_argument("--rank", type=positive_int, default=None, help="Posto do DMD")
    parser.add_argument("--trunc-tol", type=float, default=DEFAULT_TRUNC_TOL)
    parser.add_argument("--max-pairs", type=positive_int, default=DEFAULT_MAX_PAIRS,
                        help="Pares usados por --sigma auto")
    parser.add_argument("--out", required=True, help="Diretório de saída")


def load_inputs(args: argparse.Namespace):
    """Snapshots e caminhos efetivamente lidos (X, Y opcional)."""
    x_path = Path(args.input)
    y_path = Path(args.input_y) if args.input_y else None
    for p in (x_path, y_path):
        if p is not None and not p.exists():
            raise ValidationError(f"Arquivo não encontrado: {p}")
    y_file = read_sidecar(x_path).get("y_file")
    if y_path is None and y_file:
        y_path = x_path.parent / y_file
    return load_dataset(x_path, args.dt, y_path), x_path, y_path


def fit_from_args(args: argparse.Namespace, snapshots):
    """Resolve o kernel e roda o pipeline; retorna (outcome, parâmetros resolvidos)."""
    method = normalize_method(args.method)
    kernel = None
    if method in KERNEL_METHODS:
        kernel = resolve_kernel(args.kernel, args.sigma, snapshots, args.max_pairs, args.seed)
    outcome = fit_pipeline(snapshots, method, args.k, kernel, args.seed, rcond=args.rcond,
                           n_modes=args.n_modes, n_interp=args.n_interp, rank=args.rank,
                           trunc_tol=args.trunc_tol)
    params = {
        "method": method,
        "K": args.k if method in KERNEL_METHODS else None,
        "kernel": None if kernel is None else {"family": kernel.family, "sigma": kernel.sigma},
        "sigma_mode": "auto" if args.sigma == "auto" else "fixed",
        "seed": args.seed,
        "rcond": args.rcond,
        "n_modes": args.n_modes,
        "n_interp": args.n_interp,
        "rank": args.rank,
        "trunc_tol": args.trunc_tol,
        "max_pairs": args.max_pairs,
        "dt": snapshots.dt,
    }
    return outcome, params


def eigen_table(dec: KoopmanDecomposition, title: str, limit: int = 8) -> Table:
    table = Table(title=title)
    for column in ("#", "μ", "|μ|", "ln(μ)/dt"):
        table.add_column(column)
    for i, (mu, lam) in enumerate(zip(dec.mu[:limit], dec.cont_eigs[:limit])):
        table.add_row(str(i), f"{mu:.6g}", f"{abs(mu):.6g}", f"{lam:.6g}")
    return table


class FitCommand(Command):
    name = "fit"
    help = "Ajusta a matriz de Koopman e exporta o espectro"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        add_model_arguments(parser)

    def run(self, args: argparse.Namespace, argv: list[str]) -> int:
        snapshots, x_path, y_path = load_inputs(args)
        outcome, params = fit_from_args(args, snapshots)
        meta = dict(params, dataset=dataset_entry(x_path, y_path, snapshots.dt), extensions=[])

        out_dir = Path(args.out)
        written = write_model(out_dir, meta, outcome, snapshots)
        manifest = RunManifest(self.name, meta, argv)
        manifest.add_inputs(x_path, y_path)
        manifest.add_outputs(out_dir, written)
        manifest.write(out_dir)
        console.print(eigen_table(outcome.decomposition, f"Autovalores líderes ({params['method']})"))
        return 0
