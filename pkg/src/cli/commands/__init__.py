# Subcomandos da CLI
from .bench import BenchCommand
from .compare import CompareCommand
from .extend import ExtendCommand
from .fit import FitCommand
from .info import InfoCommand
from .kernel_check import KernelCheckCommand
from .simulate import SimulateFNCommand

__all__ = ["BenchCommand", "CompareCommand", "ExtendCommand", "FitCommand", "InfoCommand",
           "KernelCheckCommand", "SimulateFNCommand"]
