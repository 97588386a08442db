from __future__ import annotations
from abc import ABC, abstractmethod
import argparse

from rich.console import Console

from ..utils.errors import ValidationError

console = Console()


class Command(ABC):
    """Interface para subcomandos da CLI."""

    name: str = ""
    help: str = ""

    @abstractmethod
    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Registra as flags do subcomando."""
        raise NotImplementedError()

    @abstractmethod
    def run(self, args: argparse.Namespace, argv: list[str]) -> int:
        """Executa o subcomando e retorna o código de saída.

        Args:
            args: flags já validadas pelo argparse
            argv: linha de comando original, registrada no manifesto
        """
        raise NotImplementedError()


def positive_int(value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"inteiro esperado: {value!r}")
    if n < 1:
        raise argparse.ArgumentTypeError(f"valor deve ser positivo: {n}")
    return n


def int_list(value: str) -> list[int]:
    """"256,1024,4096" → [256, 1024, 4096]."""
    try:
        items = [int(v) for v in value.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"lista de inteiros esperada: {value!r}")
    if not items or min(items) < 1:
        raise argparse.ArgumentTypeError(f"lista deve conter inteiros positivos: {value!r}")
    return items


def sigma_value(value: str):
    """σ numérico positivo ou "auto"."""
    if value.lower() == "auto":
        return "auto"
    try:
        sigma = float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"sigma deve ser número ou 'auto': {value!r}")
    if not sigma > 0:
        raise argparse.ArgumentTypeError(f"sigma deve ser positivo: {value!r}")
    return sigma


def require_nonnegative(name: str, value: int) -> int:
    if value < 0:
        raise ValidationError(f"{name} não pode ser negativo, recebido {value}")
    return value
