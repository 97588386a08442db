from __future__ import annotations
from pathlib import Path

import numpy as np

from .base import MatrixFormat
from ..utils.errors import FormatError, ValidationError


class CsvFormat(MatrixFormat):
    """Matriz real em texto: uma linha por dimensão de estado, valores separados por vírgula."""

    def read(self, path: Path) -> np.ndarray:
        raw = Path(path).read_bytes()
        rows: list[list[float]] = []
        offset = 0
        for line in raw.splitlines(keepends=True):
            try:
                text = line.decode("utf-8").strip()
            except UnicodeDecodeError as e:
                raise FormatError(f"Bytes UTF-8 inválidos: {e.reason}", offset + e.start) from None
            if text:
                rows.append(self._parse_line(line, offset))
                if len(rows[-1]) != len(rows[0]):
                    raise FormatError(
                        f"Linha com {len(rows[-1])} colunas, esperado {len(rows[0])}", offset)
            offset += len(line)
        if not rows:
            return np.zeros((0, 0))
        return np.array(rows, dtype=np.float64)

    @staticmethod
    def _parse_line(line: bytes, offset: int) -> list[float]:
        values = []
        cursor = 0
        for field in line.decode("utf-8").split(","):
            try:
                values.append(float(field))
            except ValueError:
                raise FormatError(f"Valor não numérico {field.strip()!r}", offset + cursor) from None
            cursor += len(field.encode("utf-8")) + 1
        return values

    def write(self, matrix: np.ndarray, path: Path) -> Path:
        m = np.asarray(matrix)
        if np.iscomplexobj(m):
            raise ValidationError("CSV aceita apenas matrizes reais; use .kmx para complexas")
        if m.ndim != 2:
            raise ValidationError(f"CSV exige matriz 2-D, recebido ndim={m.ndim}")
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        lines = [",".join(repr(float(v)) for v in row) for row in m]
        path.write_text("\n".join(lines) + ("\n" if lines else ""), encoding="utf-8")
        return path
