from __future__ import annotations
from pathlib import Path
import struct

import numpy as np

from .base import MatrixFormat
from ..utils.errors import FormatError, ValidationError


class KmxFormat(MatrixFormat):
    """Formato binário "KMX1".

    Cabeçalho: magic b"KMX1", u64 linhas, u64 colunas, u8 tipo (0 real, 1 complexo),
    seguido do payload f64 little-endian em ordem de linhas (complexos intercalados re, im).
    """

    MAGIC = b"KMX1"
    HEADER = struct.Struct("<4sQQB")
    REAL, COMPLEX = 0, 1

    def read(self, path: Path) -> np.ndarray:
        raw = Path(path).read_bytes()
        if len(raw) < self.HEADER.size:
            raise FormatError("Cabeçalho KMX1 truncado", len(raw))
        magic, rows, cols, kind = self.HEADER.unpack_from(raw, 0)
        if magic != self.MAGIC:
            raise FormatError(f"Magic inválido {magic!r}", 0)
        if kind not in (self.REAL, self.COMPLEX):
            raise FormatError(f"Tipo de matriz desconhecido: {kind}", 20)
        width = 2 if kind == self.COMPLEX else 1
        expected = rows * cols * width * 8
        payload = raw[self.HEADER.size:]
        if len(payload) != expected:
            offset = self.HEADER.size + min(len(payload), expected)
            raise FormatError(
                f"Payload com {len(payload)} bytes, esperado {expected} para {rows}×{cols}", offset)
        dtype = "<c16" if kind == self.COMPLEX else "<f8"
        data = np.frombuffer(payload, dtype=dtype).reshape(rows, cols)
        return data.astype(np.complex128 if kind == self.COMPLEX else np.float64)

    def write(self, matrix: np.ndarray, path: Path) -> Path:
        m = np.asarray(matrix)
        if m.ndim != 2:
            raise ValidationError(f"KMX1 exige matriz 2-D, recebido ndim={m.ndim}")
        complex_ = np.iscomplexobj(m)
        kind = self.COMPLEX if complex_ else self.REAL
        payload = np.ascontiguousarray(m, dtype="<c16" if complex_ else "<f8").tobytes()
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("wb") as fh:
            fh.write(self.HEADER.pack(self.MAGIC, m.shape[0], m.shape[1], kind))
            fh.write(payload)
        return path
