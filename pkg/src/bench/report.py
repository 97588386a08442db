from __future__ import annotations

import csv
import json
from pathlib import Path

from .harness import PHASES, BenchResult
from .scaling import PREDICTED_SLOPES, fit_scaling, predicted_slope

CSV_COLUMNS = ["method", "K", "M", "d", "phase", "median_seconds", "repeats", "seed"]


def write_bench_csv(results: list[BenchResult], path: Path) -> Path:
    """Uma linha por (caso, fase), incluindo o total."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for r in results:
            for phase in PHASES + ("total",):
                writer.writerow([r.case.method, r.case.K, r.case.M, r.case.d, phase,
                                 repr(r.phase(phase)), r.case.repeats, r.case.seed])
    return path


def slope_summary(results: list[BenchResult], axis: str) -> dict:
    """Inclinações ajustadas por método e fase, ao lado das previstas."""
    summary: dict = {"axis": axis, "methods": {}}
    fit_axis, strict = ("d", False) if axis == "pattern" else (axis, True)
    for method in sorted({r.case.method for r in results}):
        subset = [r for r in results if r.case.method == method]
        entry = {}
        for phase in PHASES + ("total",):
            fitted = fit_scaling(subset, fit_axis, phase, strict=strict) if len(subset) >= 3 else None
            predicted = predicted_slope(method, phase, axis) if (method, phase) in PREDICTED_SLOPES else None
            entry[phase] = {"fitted": fitted, "predicted": predicted}
        summary["methods"][method] = entry
    return summary


def write_bench_summary(results: list[BenchResult], axis: str, path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(slope_summary(results, axis), indent=2, sort_keys=True),
                    encoding="utf-8")
    return path
