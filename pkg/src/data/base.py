from __future__ import annotations
from pathlib import Path
from abc import ABC, abstractmethod

import numpy as np


class MatrixFormat(ABC):
    """Interface para formatos de arquivo de matriz (leitura e escrita)."""

    @abstractmethod
    def read(self, path: Path) -> np.ndarray:
        """Lê a matriz do arquivo.

        Args:
            path: caminho para o arquivo a ser lido

        Returns:
            Matriz 2-D (float64 ou complex128)
        """
        raise NotImplementedError()

    @abstractmethod
    def write(self, matrix: np.ndarray, path: Path) -> Path:
        """Grava a matriz e retorna o caminho do arquivo gerado."""
        raise NotImplementedError()
