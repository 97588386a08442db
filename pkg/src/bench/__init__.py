# Package bench: tempos por fase e inclinações de escala
from .harness import BENCH_METHODS, PHASES, BenchCase, BenchResult, run_case, run_cases
from .report import slope_summary, write_bench_csv, write_bench_summary
from .scaling import PREDICTED_SLOPES, fit_scaling, grid_cases, predicted_slope, reference_pattern

__all__ = [
    "BENCH_METHODS", "PHASES", "PREDICTED_SLOPES", "BenchCase", "BenchResult", "fit_scaling",
    "grid_cases", "predicted_slope", "reference_pattern", "run_case", "run_cases",
    "slope_summary", "write_bench_csv", "write_bench_summary",
]
