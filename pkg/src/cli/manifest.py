"""Manifesto de execução gravado junto de toda saída da CLI."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np
import scipy

from .. import __version__
from ..data.sidecar import file_sha256
from ..utils.errors import FormatError

MANIFEST_FILE = "manifest.json"


@dataclass
class RunManifest:
    """Subcomando, parâmetros resolvidos, argv e hashes de entradas e saídas."""

    subcommand: str
    params: dict
    argv: list[str]
    version: str = __version__
    environment: dict = field(default_factory=lambda: {"numpy": np.__version__,
                                                       "scipy": scipy.__version__})
    inputs: dict[str, str] = field(default_factory=dict)
    outputs: dict[str, str] = field(default_factory=dict)

    def add_inputs(self, *paths: Path) -> None:
        for p in paths:
            if p is not None:
                self.inputs[str(Path(p))] = file_sha256(p)

    def add_outputs(self, directory: Path, paths: list[Path]) -> None:
        for p in paths:
            p = Path(p)
            if p.is_file():
                self.outputs[str(p.relative_to(directory)) if p.is_relative_to(directory)
                             else str(p)] = file_sha256(p)

    def write(self, directory: Path) -> Path:
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        path = directory / MANIFEST_FILE
        path.write_text(json.dumps(asdict(self), indent=2, sort_keys=True, default=str),
                        encoding="utf-8")
        return path

    @classmethod
    def load(cls, directory: Path) -> "RunManifest":
        path = Path(directory) / MANIFEST_FILE
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as e:
            raise FormatError(f"Manifesto inválido: {path}: {e.msg}", e.pos) from e
        return cls(**data)


def replay_argv(manifest_dir: Path, out_dir: Path) -> list[str]:
    """argv do manifesto com `--out` redirecionado para `out_dir`."""
    argv = list(RunManifest.load(manifest_dir).argv)
    target = str(out_dir)
    for i, token in enumerate(argv):
        if token == "--out" and i + 1 < len(argv):
            argv[i + 1] = target
            return argv
        if token.startswith("--out="):
            argv[i] = f"--out={target}"
            return argv
    return argv + ["--out", target]
