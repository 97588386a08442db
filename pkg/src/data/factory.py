from __future__ import annotations
from pathlib import Path
from typing import Type

from .base import MatrixFormat
from .kmx_format import KmxFormat
from .csv_format import CsvFormat
from ..utils.errors import ValidationError


class FormatFactory:
    """Fábrica simples que escolhe o formato de matriz baseado na extensão do arquivo."""

    _map: dict[str, Type[MatrixFormat]] = {
        ".kmx": KmxFormat,
        ".csv": CsvFormat,
    }

    @classmethod
    def get_format_for_path(cls, path: Path) -> MatrixFormat:
        ext = Path(path).suffix.lower()
        format_cls = cls._map.get(ext)
        if not format_cls:
            raise ValidationError(f"Extensão não suportada: {ext}")
        return format_cls()
