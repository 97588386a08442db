"""
Testes unitários para o módulo principal (CLI).
"""
import json
from unittest.mock import patch

import numpy as np
import pytest

from src.cli.base import int_list, positive_int, sigma_value
from src.cli.commands.info import InfoCommand
from src.cli.factory import CommandFactory
from src.cli.manifest import RunManifest, replay_argv
from src.data.snapshots import save_matrix
from src.main import build_parser, main
from src.utils.errors import NumericError, ValidationError


@pytest.fixture
def trajectory_file(tmp_path):
    """Trajetória aleatória 3 × 41 gravada em KMX."""
    traj = np.random.default_rng(0).standard_normal((3, 41))
    return save_matrix(traj, tmp_path / "traj.kmx")


class TestMain:
    """Testes para a função main."""

    @patch('src.main.logger')
    def test_main_without_subcommand(self, mock_logger):
        """Sem subcomando: erro de uso, código 1."""
        assert main([]) == 1
        mock_logger.error.assert_called()

    def test_main_help(self):
        """--help sai com código 0."""
        assert main(["--help"]) == 0

    @patch('src.main.logger')
    def test_main_unknown_method(self, mock_logger, trajectory_file, tmp_path):
        """Método fora das opções é erro de uso."""
        assert main(["fit", "--in", str(trajectory_file), "--method", "svd",
                     "--out", str(tmp_path / "m")]) == 1

    @patch('src.main.logger')
    def test_main_file_not_found(self, mock_logger, tmp_path):
        """Arquivo de entrada inexistente: código 1 e log de erro."""
        code = main(["fit", "--in", str(tmp_path / "nao_existe.kmx"), "--out", str(tmp_path / "m")])
        assert code == 1
        mock_logger.error.assert_called()

    @patch('src.main.logger')
    def test_main_zero_features(self, mock_logger, trajectory_file, tmp_path):
        """K = 0 é rejeitado."""
        code = main(["fit", "--in", str(trajectory_file), "--method", "rff", "--k", "0",
                     "--sigma", "1.0", "--out", str(tmp_path / "m")])
        assert code == 1

    @patch('src.main.logger')
    def test_main_empty_dataset(self, mock_logger, tmp_path):
        """simulate-fn com zero snapshots: código 1."""
        assert main(["simulate-fn", "--snapshots", "0", "--out", str(tmp_path / "d")]) == 1
        mock_logger.error.assert_called()

    @patch('src.main.logger')
    def test_main_unstable_step(self, mock_logger, tmp_path):
        """Passo interno acima do limite de estabilidade: código 1."""
        assert main(["simulate-fn", "--inner-dt", "0.01", "--out", str(tmp_path / "d")]) == 1

    @patch('src.main.logger')
    def test_main_numeric_error(self, mock_logger):
        """Falhas numéricas saem com código 2."""
        with patch.object(InfoCommand, "run", side_effect=NumericError("Gram não finita")):
            assert main(["info"]) == 2
        mock_logger.error.assert_called_with("Gram não finita")

    @patch('src.main.logger')
    def test_main_output_is_file(self, mock_logger, trajectory_file, tmp_path):
        """--out apontando para um arquivo comum: falha de execução, código 2."""
        blocker = tmp_path / "ocupado"
        blocker.write_text("x")
        code = main(["fit", "--in", str(trajectory_file), "--method", "dmd", "--out", str(blocker)])
        assert code == 2
        mock_logger.error.assert_called()

    @patch('src.main.logger')
    def test_main_linalg_error(self, mock_logger):
        """LinAlgError de numpy/scipy sai com código 2."""
        with patch.object(InfoCommand, "run", side_effect=np.linalg.LinAlgError("SVD não convergiu")):
            assert main(["info"]) == 2
        mock_logger.error.assert_called()

    @patch('src.main.logger')
    def test_main_invalid_utf8_csv(self, mock_logger, tmp_path):
        """CSV com bytes inválidos: erro de formato, código 1."""
        path = tmp_path / "bin.csv"
        path.write_bytes(b"1.0,2.0,3.0\n\xff\xfe,1\n")
        assert main(["fit", "--in", str(path), "--method", "dmd", "--out", str(tmp_path / "m")]) == 1

    @patch('src.main.logger')
    def test_extend_requires_model(self, mock_logger, tmp_path):
        """extend sobre diretório sem model.json: código 1."""
        assert main(["extend", "--model", str(tmp_path), "--k-new", "5"]) == 1

    @patch('src.main.logger')
    def test_extend_rejects_nystrom(self, mock_logger, trajectory_file, tmp_path):
        """extend só é definido para modelos rff."""
        model = tmp_path / "nys"
        assert main(["fit", "--in", str(trajectory_file), "--method", "nystrom-cheap",
                     "--k", "10", "--sigma", "2.0", "--out", str(model)]) == 0
        assert main(["extend", "--model", str(model), "--k-new", "5"]) == 1
        assert "rff" in mock_logger.error.call_args[0][0]

    @patch('src.main.logger')
    def test_extend_negative(self, mock_logger, trajectory_file, tmp_path):
        model = tmp_path / "rff"
        assert main(["fit", "--in", str(trajectory_file), "--k", "10", "--sigma", "2.0",
                     "--out", str(model)]) == 0
        assert main(["extend", "--model", str(model), "--k-new", "-3"]) == 1

    def test_info(self, capsys):
        """info lista os subcomandos."""
        assert main(["info"]) == 0
        out = capsys.readouterr().out
        for name in CommandFactory.names():
            assert name in out


class TestParser:
    """Testes para o parser e os tipos de argumento."""

    def test_all_subcommands_registered(self):
        parser = build_parser()
        args = parser.parse_args(["bench", "--out", "x", "--axis", "pattern"])
        assert args.command == "bench" and args.axis == "pattern"

    def test_sigma_auto_default(self):
        args = build_parser().parse_args(["fit", "--in", "x.kmx", "--out", "o"])
        assert args.sigma == "auto" and args.method == "rff" and args.k == 100

    def test_argument_types(self):
        import argparse
        assert positive_int("3") == 3
        assert int_list("256,1024") == [256, 1024]
        assert sigma_value("AUTO") == "auto"
        assert sigma_value("0.5") == 0.5
        for fn, value in ((positive_int, "0"), (int_list, "a,b"), (sigma_value, "-1")):
            with pytest.raises(argparse.ArgumentTypeError):
                fn(value)

    def test_factory_unknown(self):
        with pytest.raises(ValidationError):
            CommandFactory.get_command("transcrever")


class TestManifest:
    """Testes para o manifesto de execução."""

    def test_write_and_load(self, tmp_path):
        f = tmp_path / "a.csv"
        f.write_text("1,2\n")
        manifest = RunManifest("fit", {"K": 5}, ["fit", "--out", str(tmp_path)])
        manifest.add_outputs(tmp_path, [f])
        manifest.write(tmp_path)
        loaded = RunManifest.load(tmp_path)
        assert loaded.params == {"K": 5}
        assert list(loaded.outputs) == ["a.csv"]
        assert "numpy" in loaded.environment
        assert json.loads((tmp_path / "manifest.json").read_text())["subcommand"] == "fit"

    @pytest.mark.parametrize("argv, expected", [
        (["fit", "--out", "old"], ["fit", "--out", "new"]),
        (["fit", "--out=old"], ["fit", "--out=new"]),
        (["extend", "--model", "m"], ["extend", "--model", "m", "--out", "new"]),
    ])
    def test_replay_argv(self, tmp_path, argv, expected):
        """--out é redirecionado ou acrescentado."""
        RunManifest("x", {}, argv).write(tmp_path)
        assert replay_argv(tmp_path, "new") == expected
