"""
CLI tests.

Tests cover:
- JSON documents written by each command
- Exit codes for invalid input and failed checks
- Informational commands
"""

import json

import pytest

from cli.main import app


def run_json(cli_runner, tmp_path, args):
    """Invoke a command writing to a file and return (result, document)."""
    out = tmp_path / "out.json"
    result = cli_runner.invoke(app, [*args, "--output", str(out)])
    data = json.loads(out.read_text()) if out.exists() else None
    return result, data


class TestClassGroupCommand:
    """Tests for the classgroup command."""

    def test_class_group(self, cli_runner, tmp_path):
        """Test the class group document for D = -23."""
        result, data = run_json(cli_runner, tmp_path, ["classgroup", "--disc", "-23"])
        assert result.exit_code == 0
        assert data["h"] == 3
        assert data["structure"] == [3]

    def test_invalid_discriminant(self, cli_runner, tmp_path):
        """Test an even discriminant exits with 2."""
        result, data = run_json(cli_runner, tmp_path, ["classgroup", "--disc", "-4"])
        assert result.exit_code == 2
        assert data is None


class TestThetaCommands:
    """Tests for the theta and vvtheta commands."""

    def test_theta_minus_7(self, cli_runner, tmp_path):
        """Test theta of the principal class for D = -7."""
        result, data = run_json(
            cli_runner, tmp_path, ["theta", "--disc", "-7", "--class", "0", "--nmax", "5"]
        )
        assert result.exit_code == 0
        assert data["coefficients"] == {"0": 1, "1": 2, "2": 4, "4": 6}
        assert "5" not in data["coefficients"]

    def test_theta_unknown_class(self, cli_runner, tmp_path):
        """Test a class index outside Cl(D) exits with 2."""
        result, _ = run_json(cli_runner, tmp_path, ["theta", "--disc", "-23", "--class", "3"])
        assert result.exit_code == 2

    def test_vvtheta_component_zero(self, cli_runner, tmp_path):
        """Test component 0 is the scalar theta series on exponents n N."""
        _, theta = run_json(
            cli_runner, tmp_path, ["theta", "--disc", "-23", "--class", "0", "--nmax", "6"]
        )
        result, vv = run_json(
            cli_runner, tmp_path, ["vvtheta", "--disc", "-23", "--a", "0", "--h", "0", "--nmax", "6"]
        )
        assert result.exit_code == 0
        assert vv["N"] == 23
        assert len(vv["components"]) == 23
        component = vv["components"][0]
        for n, value in theta["coefficients"].items():
            assert component[str(23 * int(n))] == value

    def test_vvtheta_unknown_h(self, cli_runner, tmp_path):
        """Test the acting class is validated."""
        result, _ = run_json(cli_runner, tmp_path, ["vvtheta", "--disc", "-7", "--h", "1"])
        assert result.exit_code == 2


class TestPeterssonCommand:
    """Tests for the petersson command."""

    def test_trivial_pair_rejected(self, cli_runner, tmp_path):
        """Test the Eisenstein pairing exits with 2."""
        result, _ = run_json(
            cli_runner,
            tmp_path,
            ["petersson", "--disc", "-23", "--psi", "0", "--chi", "0", "--method", "closed_form"],
        )
        assert result.exit_code == 2

    def test_closed_form(self, cli_runner, tmp_path):
        """Test a closed form document for a pair of cubic characters."""
        result, data = run_json(
            cli_runner,
            tmp_path,
            ["petersson", "--disc", "-23", "--psi", "1", "--chi", "1", "--method", "closed_form"],
        )
        assert result.exit_code == 0
        assert data["method"] == "closed_form"
        assert float(data["value"][0]) > 0

    def test_unknown_method(self, cli_runner, tmp_path):
        """Test the method is validated."""
        result, _ = run_json(
            cli_runner,
            tmp_path,
            ["petersson", "--disc", "-23", "--psi", "1", "--chi", "1", "--method", "simpson"],
        )
        assert result.exit_code == 2


class TestVerifyCommand:
    """Tests for the verify command."""

    def test_cheap_checks_pass(self, cli_runner, tmp_path):
        """Test a passing run exits with 0 and writes the report."""
        result, data = run_json(
            cli_runner,
            tmp_path,
            ["verify", "--disc", "-23", "--checks", "class_number,cuspidality", "--nmax", "5"],
        )
        assert result.exit_code == 0
        assert data["passed"] is True
        assert [c["name"] for c in data["checks"]] == ["class_number", "cuspidality"]

    def test_unknown_check(self, cli_runner, tmp_path):
        """Test an unknown check name exits with 2."""
        result, data = run_json(
            cli_runner, tmp_path, ["verify", "--disc", "-23", "--checks", "nonexistent"]
        )
        assert result.exit_code == 2
        assert data is None

    def test_config_file(self, cli_runner, tmp_path, temp_config_file):
        """Test checks and sizes come from the YAML configuration."""
        result, data = run_json(
            cli_runner, tmp_path, ["verify", "--config", str(temp_config_file), "--disc", "-15"]
        )
        assert result.exit_code == 0
        assert data["disc"] == -15
        assert data["config"]["prec_bits"] == 96


@pytest.mark.slow
class TestLiftCommand:
    """Tests for the lift command."""

    def test_lift_minus_7(self, cli_runner, tmp_path):
        """Test the lift of theta_0 for D = -7 is supported on A n = r^2."""
        result, data = run_json(
            cli_runner, tmp_path, ["lift", "--disc", "-7", "--nmax", "2", "--prec-bits", "96"]
        )
        assert result.exit_code == 0
        assert data["meta"]["support_ok"] is True
        assert data["meta"]["class"] == 0


class TestInfoCommands:
    """Tests for informational commands."""

    def test_checks(self, cli_runner):
        """Test the check table lists the registry."""
        result = cli_runner.invoke(app, ["checks"])
        assert result.exit_code == 0
        assert "class_number" in result.stdout

    def test_version(self, cli_runner):
        """Test version output."""
        from thetalift import __version__

        result = cli_runner.invoke(app, ["version"])
        assert result.exit_code == 0
        assert __version__ in result.stdout

    @pytest.mark.parametrize("level", ["info", "nonsense"])
    def test_log_level_from_environment(self, cli_runner, monkeypatch, level):
        """Test THETALIFT_LOG_LEVEL is read, with unknown names falling back to WARNING."""
        monkeypatch.setenv("THETALIFT_LOG_LEVEL", level)
        result = cli_runner.invoke(app, ["checks"])
        assert result.exit_code == 0
