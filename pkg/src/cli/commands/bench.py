from __future__ import annotations
import argparse
from pathlib import Path

from rich.table import Table

from ..base import Command, console, int_list, positive_int
from ..manifest import RunManifest
from ...bench import (BENCH_METHODS, grid_cases, run_cases, slope_summary, write_bench_csv,
                      write_bench_summary)

BENCH_CSV = "bench.csv"
BENCH_SUMMARY = "bench_summary.json"


class BenchCommand(Command):
    """Tempos por fase em uma grade (K, M, d) e inclinações log–log."""

    name = "bench"
    help = "Benchmark de escala (base, matriz de Koopman, autoespectro)"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--method", choices=["rff", "nystrom-cheap", "nystrom-expensive", "all"],
                            default="all")
        parser.add_argument("--axis", choices=["M", "d", "K", "pattern"], default="M")
        parser.add_argument("--repeats", type=positive_int, default=3)
        parser.add_argument("--seed", type=int, default=0)
        parser.add_argument("--k-values", type=int_list, default=None)
        parser.add_argument("--m-values", type=int_list, default=None)
        parser.add_argument("--d-values", type=int_list, default=None)
        parser.add_argument("--out", required=True, help="Diretório de saída")

    def run(self, args: argparse.Namespace, argv: list[str]) -> int:
        methods = BENCH_METHODS if args.method == "all" else (args.method.replace("-", "_"),)
        cases = [case for m in methods
                 for case in grid_cases(m, args.axis, args.repeats, args.seed,
                                        args.k_values, args.m_values, args.d_values)]
        results = run_cases(cases)

        out_dir = Path(args.out)
        csv_path = write_bench_csv(results, out_dir / BENCH_CSV)
        summary_path = write_bench_summary(results, args.axis, out_dir / BENCH_SUMMARY)

        table = Table(title=f"Inclinações log–log (eixo {args.axis})")
        for column in ("método", "fase", "ajustada", "prevista"):
            table.add_column(column)
        for method, phases in slope_summary(results, args.axis)["methods"].items():
            for phase, entry in phases.items():
                fitted = "-" if entry["fitted"] is None else f"{entry['fitted']:.2f}"
                table.add_row(method, phase, fitted, f"{entry['predicted']:.0f}")
        console.print(table)

        manifest = RunManifest(self.name, {"methods": list(methods), "axis": args.axis,
                                           "repeats": args.repeats, "seed": args.seed,
                                           "cases": [[c.method, c.K, c.M, c.d] for c in cases]}, argv)
        manifest.add_outputs(out_dir, [csv_path, summary_path])
        manifest.write(out_dir)
        return 0
