from __future__ import annotations
import argparse
import json
from pathlib import Path

import numpy as np
import scipy
from rich.table import Table

from ..base import Command, console
from ..model import FIT_METHODS, read_model
from ... import __version__
from ...bench import PREDICTED_SLOPES
from ...kernels import KernelFactory
from ...utils.config import Settings


class InfoCommand(Command):
    name = "info"
    help = "Versões, configuração e, com --model, o resumo de um modelo"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--model", default=None, help="Diretório de modelo gravado por `fit`")

    def run(self, args: argparse.Namespace, argv: list[str]) -> int:
        if args.model:
            console.print(self._model_table(Path(args.model)))
            return 0
        from ..factory import CommandFactory

        settings = Settings.from_env()
        table = Table(title=f"koop-rand {__version__}")
        table.add_column("item")
        table.add_column("valor")
        table.add_row("numpy", np.__version__)
        table.add_row("scipy", scipy.__version__)
        table.add_row("threads", str(settings.threads))
        table.add_row("orçamento de memória", f"{settings.memory_budget} bytes")
        table.add_row("kernels", ", ".join(KernelFactory.families()))
        table.add_row("métodos", ", ".join(FIT_METHODS))
        table.add_row("subcomandos", ", ".join(CommandFactory.names()))
        console.print(table)

        slopes = Table(title="Expoentes assintóticos previstos (K, M, d)")
        for column in ("método", "fase", "K", "M", "d"):
            slopes.add_column(column)
        for (method, phase), exp in PREDICTED_SLOPES.items():
            slopes.add_row(method, phase, str(exp["K"]), str(exp["M"]), str(exp["d"]))
        console.print(slopes)
        return 0

    @staticmethod
    def _model_table(model_dir: Path) -> Table:
        meta = read_model(model_dir)
        table = Table(title=f"Modelo {model_dir}")
        table.add_column("campo")
        table.add_column("valor")
        for key in ("method", "K", "kernel", "seed", "dt", "rcond", "extensions"):
            table.add_row(key, json.dumps(meta.get(key)))
        summary_path = model_dir / "summary.json"
        if summary_path.exists():
            summary = json.loads(summary_path.read_text(encoding="utf-8"))
            for key in ("n_features", "n_modes", "eig_residual", "defective", "leading_cont_eigs"):
                table.add_row(key, json.dumps(summary.get(key)))
        return table
