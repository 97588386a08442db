"""Geradores aleatórios com semente explícita e fluxos nomeados."""
from __future__ import annotations

import numpy as np


def make_rng(seed: int, *stream: int) -> np.random.Generator:
    """Gerador PCG64 derivado de `seed`; `stream` separa fluxos independentes.

    make_rng(7) e make_rng(7, 1) são estatisticamente independentes e ambos
    reprodutíveis.
    """
    sequence = np.random.SeedSequence(entropy=int(seed), spawn_key=tuple(int(s) for s in stream))
    return np.random.Generator(np.random.PCG64(sequence))


def split_seeds(seed: int, n: int) -> list[int]:
    """Deriva `n` sementes de 63 bits a partir de `seed`."""
    children = np.random.SeedSequence(int(seed)).spawn(n)
    return [int(child.generate_state(1, dtype=np.uint64)[0] >> np.uint64(1)) for child in children]
