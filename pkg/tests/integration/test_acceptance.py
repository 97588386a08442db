"""
Experimentos em escala de bancada: espectro líder no Fitzhugh–Nagumo e inclinações de tempo.
"""
import json

import pytest

from src.bench.harness import run_cases
from src.bench.scaling import fit_scaling, grid_cases
from src.main import main

pytestmark = pytest.mark.slow


@pytest.fixture(scope="module")
def fn_data(tmp_path_factory):
    """FN com d = 100 e M = 800."""
    root = tmp_path_factory.mktemp("fn800")
    assert main(["simulate-fn", "--out", str(root), "--snapshots", "800", "--seed", "0"]) == 0
    return root / "fn.kmx"


def compare(data, out, method: str, K: int) -> dict:
    assert main(["compare", "--in", str(data), "--method", method, "--k", str(K),
                 "--seed", "1", "--n", "2", "--out", str(out)]) == 0
    return json.loads((out / "compare.json").read_text())


class TestFitzhughNagumoSpectrum:
    """Par líder de autovalores e modos contra o DMD."""

    def test_rff_leading_pair_matches_dmd(self, fn_data, tmp_path):
        """RFF com K = 600 e σ automático: erro < 0.05 e |cos| > 0.95."""
        report = compare(fn_data, tmp_path, "rff", 600)
        assert report["leading_eigenvalue_error"] < 0.05
        assert min(report["mode_similarity"]) > 0.95

    def test_expensive_nystrom_not_worse_than_rff(self, fn_data, tmp_path):
        """Com K = 100 o Nyström caro erra no máximo 0.01 a mais que o RFF."""
        nystrom = compare(fn_data, tmp_path / "nystrom", "nystrom-expensive", 100)
        rff = compare(fn_data, tmp_path / "rff", "rff", 100)
        assert nystrom["leading_eigenvalue_error"] <= rff["leading_eigenvalue_error"] + 0.01


class TestScalingSlopes:
    """Inclinações log–log medidas nas grades padrão."""

    def test_rff_basis_linear_in_m(self):
        """RFF: fase de base linear em M com K = 50 e d = 1000."""
        results = run_cases(grid_cases("rff", "M"))
        assert fit_scaling(results, "M", "basis") == pytest.approx(1.0, abs=0.3)

    def test_cheap_nystrom_flat_in_m(self):
        """Nyström barato: tempo total independente de M."""
        results = run_cases(grid_cases("nystrom_cheap", "M"))
        assert fit_scaling(results, "M", "total") < 0.3

    def test_expensive_nystrom_basis_linear_in_m(self):
        """Nyström caro: interpolação em todas as M colunas, linear em M."""
        results = run_cases(grid_cases("nystrom_expensive", "M"))
        assert fit_scaling(results, "M", "basis") == pytest.approx(1.0, abs=0.3)

    def test_rff_basis_linear_in_d(self):
        """RFF: fase de base linear em d com M = 2000."""
        results = run_cases(grid_cases("rff", "d"))
        assert fit_scaling(results, "d", "basis") == pytest.approx(1.0, abs=0.3)
