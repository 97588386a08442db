"""KoopRand: operador de Koopman via EDMD com features aleatórias de kernel."""
from .utils.config import apply_thread_limits

apply_thread_limits()

__version__ = "0.1.0"
