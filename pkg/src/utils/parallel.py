from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable

import numpy as np

from .config import Settings

BLOCK_COLUMNS = 256


def map_column_blocks(fn: Callable[[np.ndarray], np.ndarray], S: np.ndarray,
                      threads: int | None = None) -> np.ndarray:
    """Aplica `fn` a blocos de colunas de S (d × n) e empilha as linhas resultantes.

    `fn` recebe um bloco d × b e devolve b × K. A largura dos blocos é fixa,
    então o resultado não depende do número de threads.
    """
    n = S.shape[1]
    starts = list(range(0, n, BLOCK_COLUMNS))
    if len(starts) <= 1:
        return fn(S)
    workers = threads if threads is not None else Settings.from_env().threads
    blocks = [S[:, s:s + BLOCK_COLUMNS] for s in starts]
    if workers <= 1:
        parts = [fn(b) for b in blocks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(fn, blocks))
    return np.vstack(parts)
