from __future__ import annotations
import argparse
import csv
from pathlib import Path

import numpy as np
from rich.table import Table

from ..base import Command, console, int_list, positive_int
from ..manifest import RunManifest
from ...features import kernel_convergence
from ...kernels import FAMILIES, KernelSpec

CONVERGENCE_FILE = "kernel_convergence.csv"


class KernelCheckCommand(Command):
    """Erro médio |estimativa RFF − kernel exato| em função de K."""

    name = "kernel-check"
    help = "Mede a convergência Monte Carlo das features de Fourier"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--kernel", choices=list(FAMILIES), default="gaussian")
        parser.add_argument("--sigma", type=float, default=1.0)
        parser.add_argument("--k-list", type=int_list, default=[256, 1024, 4096, 16384])
        parser.add_argument("--pairs", type=positive_int, default=100)
        parser.add_argument("--d", type=positive_int, default=5, help="Dimensão dos pontos de teste")
        parser.add_argument("--seed", type=int, default=0)
        parser.add_argument("--out", required=True, help="Diretório de saída")

    def run(self, args: argparse.Namespace, argv: list[str]) -> int:
        spec = KernelSpec(args.kernel, args.sigma)
        rows = kernel_convergence(spec, args.k_list, args.pairs, args.d, args.seed)

        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        path = out_dir / CONVERGENCE_FILE
        with path.open("w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["K", "error"])
            for K, error in rows:
                writer.writerow([K, repr(error)])

        table = Table(title=f"Convergência RFF ({spec.family}, σ={spec.sigma:g}, d={args.d})")
        table.add_column("K")
        table.add_column("erro médio")
        for K, error in rows:
            table.add_row(str(K), f"{error:.4e}")
        console.print(table)
        if len(rows) >= 2 and all(e > 0 for _, e in rows):
            slope = np.polyfit(np.log([k for k, _ in rows]), np.log([e for _, e in rows]), 1)[0]
            console.print(f"Inclinação log–log: {slope:.3f} (Monte Carlo: −0.5)")

        manifest = RunManifest(self.name, {"kernel": spec.family, "sigma": spec.sigma,
                                           "k_list": args.k_list, "pairs": args.pairs,
                                           "d": args.d, "seed": args.seed}, argv)
        manifest.add_outputs(out_dir, [path])
        manifest.write(out_dir)
        return 0
