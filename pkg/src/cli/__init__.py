# Package cli: subcomandos, manifesto de execução e layout de modelos
from .factory import CommandFactory
from .manifest import RunManifest, replay_argv

__all__ = ["CommandFactory", "RunManifest", "replay_argv"]
