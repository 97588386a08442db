# Package fnsim: Fitzhugh–Nagumo 1-D como problema de teste
from .config import FNConfig
from .dataset import dataset_metadata, front_state, gaussian_bumps, generate_dataset, grid
from .solver import FNState, fn_run, fn_step, laplacian

__all__ = ["FNConfig", "FNState", "dataset_metadata", "fn_run", "fn_step", "front_state",
           "gaussian_bumps", "generate_dataset", "grid", "laplacian"]
