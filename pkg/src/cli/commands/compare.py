from __future__ import annotations
import argparse
from pathlib import Path

from ..base import Command, console, positive_int
from ..manifest import RunManifest
from ..model import write_json
from .fit import add_model_arguments, eigen_table, fit_from_args, load_inputs
from ...edmd import dmd, leading_eigenvalue_error, mode_similarity

COMPARE_FILE = "compare.json"


def _pairs(values) -> list[list[float]]:
    return [[float(z.real), float(z.imag)] for z in values]


class CompareCommand(Command):
    """Ajusta um método EDMD e o DMD nos mesmos dados e compara o espectro líder."""

    name = "compare"
    help = "Compara autovalores e modos líderes contra o DMD"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        add_model_arguments(parser)
        parser.add_argument("--n", type=positive_int, default=2, help="Autovalores líderes comparados")

    def run(self, args: argparse.Namespace, argv: list[str]) -> int:
        snapshots, x_path, y_path = load_inputs(args)
        outcome, params = fit_from_args(args, snapshots)
        dec = outcome.decomposition
        ref = dmd(snapshots, rank=args.rank, rcond=args.rcond)

        error = leading_eigenvalue_error(dec, ref, args.n)
        similarity = mode_similarity(dec, ref, args.n)
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        path = write_json(out_dir / COMPARE_FILE, {
            "method": params["method"],
            "n": args.n,
            "leading_eigenvalue_error": error,
            "mode_similarity": [float(s) for s in similarity],
            "cont_eigs": _pairs(dec.cont_eigs[:args.n]),
            "dmd_cont_eigs": _pairs(ref.cont_eigs[:args.n]),
        })

        manifest = RunManifest(self.name, params, argv)
        manifest.add_inputs(x_path, y_path)
        manifest.add_outputs(out_dir, [path])
        manifest.write(out_dir)
        console.print(eigen_table(dec, f"{params['method']}", args.n))
        console.print(eigen_table(ref, "dmd", args.n))
        console.print(f"Erro dos {args.n} autovalores líderes: {error:.4e}; "
                      f"similaridade dos modos: {', '.join(f'{s:.3f}' for s in similarity)}")
        return 0
