"""
Tests for the flagtwist command line
"""

import json
import logging

import pytest
from rich.logging import RichHandler
from typer.testing import CliRunner

from src.cli import EXIT_BAD_INPUT, EXIT_ERROR, EXIT_FAILED, EXIT_OK, app
from src.errors import LinearAlgebraError
from src.logging_setup import configure_logging

runner = CliRunner()


def invoke(*args):
    return runner.invoke(app, ["--log-level", "ERROR", *args])


def payload(result):
    return json.loads(result.stdout)


@pytest.fixture
def star_triple(tmp_path):
    path = tmp_path / "t3.json"
    result = invoke("gen", "--n", "3", "--twistor", "--seed", "5", "--out", str(path))
    assert result.exit_code == EXIT_OK
    return path


class TestGen:
    """Test flagtwist gen."""

    def test_json(self, tmp_path):
        """Test that gen writes the file and reports its flags."""
        path = tmp_path / "c.json"
        result = invoke("gen", "--n", "4", "--mode", "collinear", "--twistor", "--seed", "7",
                        "--out", str(path), "--json")
        assert result.exit_code == EXIT_OK
        data = payload(result)
        assert data["category"] == "T(4)-"
        assert path.exists()

    def test_bad_mode(self, tmp_path):
        """Test that an unknown mode is bad input."""
        result = invoke("gen", "--n", "2", "--mode", "circle", "--out", str(tmp_path / "c.json"))
        assert result.exit_code == EXIT_BAD_INPUT

    def test_bad_n(self, tmp_path):
        """Test that n = 0 is bad input."""
        result = invoke("gen", "--n", "0", "--out", str(tmp_path / "c.json"), "--json")
        assert result.exit_code == EXIT_BAD_INPUT
        assert payload(result)["status"] == "error"


class TestClassifyAndDim:
    """Test flagtwist classify and dim."""

    def test_classify(self, star_triple):
        """Test the flags of a general twistor triple."""
        result = invoke("classify", "--config", str(star_triple), "--json")
        assert result.exit_code == EXIT_OK
        data = payload(result)
        assert data["category"] == "T*(3)"
        assert data["collinear_witness"] is None

    def test_classify_table(self, star_triple):
        """Test the table output."""
        result = invoke("classify", "--config", str(star_triple))
        assert result.exit_code == EXIT_OK
        assert "pairwise_disjoint" in result.stdout

    def test_missing_file(self, tmp_path):
        """Test that a missing configuration is bad input."""
        result = invoke("classify", "--config", str(tmp_path / "absent.json"))
        assert result.exit_code == EXIT_BAD_INPUT

    def test_malformed_file(self, tmp_path):
        """Test that malformed JSON is bad input with its position."""
        path = tmp_path / "bad.json"
        path.write_text('{"conics": [', encoding="utf-8")
        result = invoke("classify", "--config", str(path), "--json")
        assert result.exit_code == EXIT_BAD_INPUT
        assert "line 1" in payload(result)["error"]

    def test_dim(self, star_triple):
        """Test h0(I_A(1,2)) = 3 for three general twistor fibers."""
        result = invoke("dim", "--config", str(star_triple), "--bidegree", "1,2", "--json")
        assert result.exit_code == EXIT_OK
        data = payload(result)
        assert (data["h0"], data["h1"], data["chi"]) == (3, 0, 3)

    def test_dim_text(self, star_triple):
        """Test the one-line text output."""
        result = invoke("dim", "--config", str(star_triple), "--bidegree", "1,2")
        assert "h0 = 3, h1 = 0, chi = 3" in result.stdout

    def test_dim_bad_bidegree(self, star_triple):
        """Test that (0,0) is bad input."""
        result = invoke("dim", "--config", str(star_triple), "--bidegree", "0,0")
        assert result.exit_code == EXIT_BAD_INPUT


class TestMember:
    """Test flagtwist member."""

    def test_member(self, tmp_path):
        """Test the analysis of a member through two twistor fibers."""
        path = tmp_path / "t2.json"
        invoke("gen", "--n", "2", "--twistor", "--seed", "2", "--out", str(path))
        result = invoke("member", "--config", str(path), "--bidegree", "1,1", "--seed", "3",
                        "--check", "irreducible,contains", "--json")
        assert result.exit_code == EXIT_OK
        data = payload(result)
        assert data["h0"] == 2
        assert data["contained_conics"] == [0, 1]
        assert "singular_points_found" not in data

    def test_empty_system(self, tmp_path):
        """Test that an empty system exits with an error."""
        path = tmp_path / "t5.json"
        invoke("gen", "--n", "5", "--twistor", "--seed", "1", "--out", str(path))
        result = invoke("member", "--config", str(path), "--bidegree", "1,1", "--json")
        assert result.exit_code == EXIT_ERROR
        assert payload(result)["h0"] == 0

    def test_needs_p_degree_one(self, star_triple):
        """Test that member analysis needs bidegree (1,d)."""
        result = invoke("member", "--config", str(star_triple), "--bidegree", "2,1")
        assert result.exit_code == EXIT_BAD_INPUT

    def test_unknown_check(self, star_triple):
        """Test that an unknown check is bad input."""
        result = invoke("member", "--config", str(star_triple), "--bidegree", "1,2",
                        "--check", "smooth")
        assert result.exit_code == EXIT_BAD_INPUT


class TestVerify:
    """Test flagtwist verify and scenarios."""

    def test_verify_stdout(self):
        """Test a passing run printed as JSON."""
        result = invoke("verify", "--scenario", "cor1", "--d", "1", "--n", "2", "--trials", "2",
                        "--seed", "1")
        assert result.exit_code == EXIT_OK
        assert payload(result)["verdict"]["status"] == "pass"

    def test_verify_out(self, tmp_path):
        """Test writing a CSV report to a file."""
        path = tmp_path / "cor1.csv"
        result = invoke("verify", "--scenario", "cor1", "--d", "1", "--n", "2", "--trials", "2",
                        "--out", str(path), "--format", "csv")
        assert result.exit_code == EXIT_OK
        assert path.read_text(encoding="utf-8").startswith("index,seed,retries,outcome")

    def test_verify_unknown_scenario(self):
        """Test that an unknown scenario is bad input."""
        assert invoke("verify", "--scenario", "cor9").exit_code == EXIT_BAD_INPUT

    def test_verify_bad_params(self):
        """Test that a violated constraint is bad input."""
        result = invoke("verify", "--scenario", "cor1", "--d", "1", "--n", "3")
        assert result.exit_code == EXIT_BAD_INPUT

    def test_verify_bad_format(self):
        """Test that an unknown format is bad input."""
        result = invoke("verify", "--scenario", "cor1", "--format", "xml")
        assert result.exit_code == EXIT_BAD_INPUT

    def test_verify_runtime_error(self, monkeypatch):
        """Test that a runtime error inside a run exits with the failure code."""

        def broken(*args, **kwargs):
            raise LinearAlgebraError("nullspace of an empty matrix")

        monkeypatch.setattr("src.cli.run_scenario", broken)
        result = invoke("verify", "--scenario", "cor1", "--d", "1", "--n", "2")
        assert result.exit_code == EXIT_FAILED

    def test_failed_exit_code(self):
        """Test that the failure exit code differs from the error code."""
        assert EXIT_FAILED not in (EXIT_OK, EXIT_ERROR, EXIT_BAD_INPUT)

    def test_scenarios(self):
        """Test the scenario listing."""
        result = invoke("scenarios", "--json")
        assert result.exit_code == EXIT_OK
        names = [s["name"] for s in payload(result)["scenarios"]]
        assert len(names) == 22
        assert "primo-caso" in names


class TestLogging:
    """Test the --log-level option and configure_logging."""

    def test_bad_level(self):
        """Test that an unknown level is bad input."""
        result = runner.invoke(app, ["--log-level", "LOUD", "scenarios"])
        assert result.exit_code == EXIT_BAD_INPUT

    def test_configure(self):
        """Test that configure_logging sets the package level once."""
        logger = configure_logging("debug")
        assert logger.level == logging.DEBUG
        configure_logging("WARNING")
        assert sum(isinstance(h, RichHandler) for h in logger.handlers) == 1
        with pytest.raises(ValueError, match="LOUD"):
            configure_logging("LOUD")
