# Copyright 2026 The anomalab Authors.

import json

import pytest

from anomalab import cli, experiments
from anomalab.errors import QuadratureFailure


def test_identity_check_passes(tmp_path, capsys):
    code = cli.run(["identities", "--check", "u0sq", "--out", str(tmp_path)])
    assert code == 0
    assert "u0^2 == -u0' : EXACT PASS" in capsys.readouterr().out
    assert (tmp_path / "identities.csv").read_text().splitlines()[1] == "u0^2 == -u0',PASS"
    document = json.loads((tmp_path / "identities.json").read_text())
    assert document["config"]["params"] == {"check": "u0sq"}


def test_forecast_with_negative_values(tmp_path):
    code = cli.run(["forecast", "--speeds", "-1,1/2", "--seeds", "-1,1", "--depth", "1",
                    "--out", str(tmp_path)])
    assert code == 0
    lines = json.loads((tmp_path / "forecast_lines.json").read_text())
    assert lines["speeds"] == [-1.0, 0.5]
    assert lines["seeds"] == [-1.0, 1.0]
    assert lines["exact"] is True
    assert (tmp_path / "forecast.csv").read_text().startswith("t,x\n")


def test_fourier_table_rows(tmp_path):
    code = cli.run(["fourier", "--k-max", "3", "--out", str(tmp_path)])
    assert code == 0
    assert len((tmp_path / "fourier.csv").read_text().splitlines()) == 4


@pytest.mark.parametrize("argv", [
    ["identities", "--check", "nonsense"],
    ["identities", "--eps", "0.1"],
    ["wave", "--cfl", "2"],
    ["no-such-command"],
    ["blowup", "--eps-sweep", "0.1:0.01:linear"],
])
def test_invalid_input(argv, tmp_path, capsys):
    assert cli.run(argv + ["--out", str(tmp_path)]) == 2


def test_failed_check(tmp_path, capsys):
    argv = ["blowup", "--eps", "0.1", "--out", str(tmp_path)]
    assert cli.run(argv) == 4
    assert "anomalab: check failed" in capsys.readouterr().err
    assert cli.run(argv + ["--no-assert"]) == 0
    assert json.loads((tmp_path / "blowup.json").read_text())["passed"] is False


def test_numerical_failure(tmp_path, monkeypatch, capsys):
    def fourier(k_max=8):
        raise QuadratureFailure("did not converge")

    monkeypatch.setitem(experiments._EXPERIMENTS, "fourier", fourier)
    assert cli.run(["fourier", "--out", str(tmp_path)]) == 3
    assert "did not converge" in capsys.readouterr().err


def test_config_file(tmp_path):
    config = tmp_path / "run.json"
    config.write_text(json.dumps({"command": "fourier", "params": {"k_max": 2}}))
    out = tmp_path / "out"
    assert cli.run(["fourier", "--config", str(config), "--out", str(out)]) == 0
    assert json.loads((out / "fourier.json").read_text())["summary"] == {"k_max": 2}


def test_negative_values_are_attached():
    argv = ["forecast", "--seeds", "-1,1", "--speeds", "1,-1", "--c", "-0.5", "--out", "x"]
    assert cli._attach_negative_values(argv) == [
        "forecast", "--seeds=-1,1", "--speeds", "1,-1", "--c=-0.5", "--out", "x"]


def test_golden_files(tmp_path):
    golden = tmp_path / "golden"
    argv = ["fourier", "--k-max", "3", "--golden", str(golden)]
    assert cli.run(argv + ["--out", str(tmp_path / "first")]) == 0
    assert (golden / "fourier.csv").exists()
    assert cli.run(argv + ["--out", str(tmp_path / "second")]) == 0
    (golden / "fourier.csv").write_text("k\n")
    assert cli.run(argv + ["--out", str(tmp_path / "third")]) == 4
    assert cli.run(argv + ["--out", str(tmp_path / "fourth"), "--no-assert"]) == 0
