#!/usr/bin/env python3
"""
Entrypoint CLI para aproximação do operador de Koopman com features aleatórias.
"""
from __future__ import annotations
import argparse
import sys
from typing import Optional

import numpy as np

from .cli.factory import CommandFactory
from .utils.errors import KoopmanError
from .utils.logger import get_logger

logger = get_logger("koop-rand")

RUNTIME_EXIT_CODE = 2


class CliParser(argparse.ArgumentParser):
    """ArgumentParser cujos erros de uso saem com código 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        logger.error(message)
        raise SystemExit(1)


def build_parser() -> CliParser:
    parser = CliParser(prog="koop-rand",
                       description="EDMD com features aleatórias de Fourier e Nyström")
    subparsers = parser.add_subparsers(dest="command", metavar="<subcomando>")
    subparsers.required = True
    for name in CommandFactory.names():
        command = CommandFactory.get_command(name)
        sub = subparsers.add_parser(name, help=command.help, description=command.help)
        command.add_arguments(sub)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else (0 if e.code is None else 1)

    try:
        return CommandFactory.get_command(args.command).run(args, argv)
    except KoopmanError as e:
        logger.error(str(e))
        return e.exit_code
    except (OSError, np.linalg.LinAlgError) as e:
        logger.error(f"Falha de execução: {e}")
        return RUNTIME_EXIT_CODE


if __name__ == "__main__":
    raise SystemExit(main())
