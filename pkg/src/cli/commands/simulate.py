from __future__ import annotations
import argparse
from pathlib import Path

from ..base import Command, console
from ..manifest import RunManifest
from ...data.sidecar import file_sha256, write_sidecar
from ...data.snapshots import save_matrix
from ...fnsim import FNConfig, dataset_metadata, generate_dataset
from ...utils.logger import get_logger

logger = get_logger("cli")

DATASET_STEM = "fn"


class SimulateFNCommand(Command):
    """Gera o dataset de Fitzhugh–Nagumo (pares X, Y + sidecar JSON)."""

    name = "simulate-fn"
    help = "Gera snapshots do sistema de Fitzhugh–Nagumo 1-D"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        d = FNConfig()
        parser.add_argument("--out", required=True, help="Diretório de saída")
        parser.add_argument("--snapshots", type=int, default=d.n_snapshots, help="Número de pares M")
        parser.add_argument("--seed", type=int, default=d.seed)
        parser.add_argument("--nx", type=int, default=d.nx, help="Pontos da malha")
        parser.add_argument("--length", type=float, default=d.L, help="Comprimento do domínio")
        parser.add_argument("--c0", type=float, default=d.c0)
        parser.add_argument("--c1", type=float, default=d.c1)
        parser.add_argument("--delta", type=float, default=d.delta)
        parser.add_argument("--epsilon", type=float, default=d.epsilon)
        parser.add_argument("--dt-snap", type=float, default=d.dt_snap, help="Intervalo entre snapshots")
        parser.add_argument("--inner-dt", type=float, default=d.inner_dt, help="Passo de integração")
        parser.add_argument("--perturb-every", type=int, default=d.perturb_every)
        parser.add_argument("--perturb-amp", type=float, default=d.perturb_amp)
        parser.add_argument("--burn-in", type=float, default=d.burn_in)
        parser.add_argument("--bumps", type=int, default=d.n_bumps, help="Gaussianas por perturbação")
        parser.add_argument("--format", choices=["kmx", "csv"], default="kmx")

    def run(self, args: argparse.Namespace, argv: list[str]) -> int:
        cfg = FNConfig(nx=args.nx, L=args.length, c0=args.c0, c1=args.c1, delta=args.delta,
                       epsilon=args.epsilon, dt_snap=args.dt_snap, inner_dt=args.inner_dt,
                       n_snapshots=args.snapshots, perturb_every=args.perturb_every,
                       perturb_amp=args.perturb_amp, seed=args.seed, burn_in=args.burn_in,
                       n_bumps=args.bumps)
        snapshots = generate_dataset(cfg)

        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        x_path = save_matrix(snapshots.X, out_dir / f"{DATASET_STEM}.{args.format}")
        y_path = save_matrix(snapshots.Y, out_dir / f"{DATASET_STEM}_y.{args.format}")
        side = write_sidecar(x_path, {
            "dt": cfg.dt_snap,
            "y_file": y_path.name,
            "fnsim": dataset_metadata(cfg),
            "sha256": {x_path.name: file_sha256(x_path), y_path.name: file_sha256(y_path)},
        })

        manifest = RunManifest(self.name, dataset_metadata(cfg), argv)
        manifest.add_outputs(out_dir, [x_path, y_path, side])
        manifest.write(out_dir)
        console.print(f"Dataset FN: d={snapshots.d}, M={snapshots.M} → {x_path}")
        return 0
