from __future__ import annotations
from typing import Type

from .base import Command
from .commands import (BenchCommand, CompareCommand, ExtendCommand, FitCommand, InfoCommand,
                       KernelCheckCommand, SimulateFNCommand)
from ..utils.errors import ValidationError


class CommandFactory:
    """Fábrica simples que escolhe o subcomando pelo nome."""

    _map: dict[str, Type[Command]] = {
        "simulate-fn": SimulateFNCommand,
        "fit": FitCommand,
        "extend": ExtendCommand,
        "kernel-check": KernelCheckCommand,
        "bench": BenchCommand,
        "info": InfoCommand,
        "compare": CompareCommand,
    }

    @classmethod
    def get_command(cls, name: str) -> Command:
        command_cls = cls._map.get(name)
        if not command_cls:
            raise ValidationError(f"Subcomando não suportado: {name}")
        return command_cls()

    @classmethod
    def names(cls) -> list[str]:
        return list(cls._map)
