"""End-to-end tests for the gca command line."""

import json

import pytest

from gca_cli import COMMANDS, cli_run
from cli import nf
from reports import suites


def last_error(err: str) -> dict:
    lines = [line for line in err.splitlines() if line.strip()]
    return json.loads(lines[-1])


def test_every_command_has_help_text():
    for module in COMMANDS.values():
        assert module.HELP
        assert callable(module.add_arguments)
        assert callable(module.run)


def test_nf_example(capsys):
    assert cli_run(["nf", "--expr", "c[2]*c[1]", "--N", "3", "--n", "1"]) == 0
    assert capsys.readouterr().out == "q^2*c1*c2\n"


def test_nf_json(capsys):
    assert cli_run(["nf", "--expr", "c[1]", "--N", "2", "--n", "1", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["N"] == 2
    assert data["terms"][0]["exps"] == [1, 0]


def test_nf_writes_output_file(tmp_path, capsys):
    path = tmp_path / "nf.txt"
    assert cli_run(["nf", "--expr", "b[1,2]*b[2,1]", "--N", "3", "--n", "1", "-o", str(path)]) == 0
    assert path.read_text(encoding="utf-8") == "1\n"
    assert capsys.readouterr().out == ""


def test_parse_error_exit_code(capsys):
    assert cli_run(["nf", "--expr", "c[1] *", "--N", "3", "--n", "1"]) == 2
    error = last_error(capsys.readouterr().err)
    assert error["error"] == "parse"
    assert error["offset"] == 6


def test_missing_flag_is_a_usage_error(capsys):
    assert cli_run(["nf", "--expr", "c[1]", "--n", "1"]) == 2
    assert last_error(capsys.readouterr().err)["error"] == "usage"


def test_unknown_command(capsys):
    assert cli_run(["frobnicate"]) == 2
    assert last_error(capsys.readouterr().err)["error"] == "usage"


def test_bad_dimension_is_a_precondition_error(capsys):
    assert cli_run(["nf", "--expr", "c[1]", "--N", "1", "--n", "1"]) == 2
    assert last_error(capsys.readouterr().err)["error"] == "precondition"


def test_internal_errors_exit_3(monkeypatch, capsys):
    def boom(*args, **kwargs):
        raise RuntimeError("boom")

    monkeypatch.setattr(nf, "evaluate_text", boom)
    assert cli_run(["nf", "--expr", "c[1]", "--N", "3", "--n", "1"]) == 3
    error = last_error(capsys.readouterr().err)
    assert error["error"] == "internal"
    assert "boom" in error["message"]


def test_state_command(capsys):
    assert cli_run(["state", "--word", "c[2]", "--N", "3", "--n", "1"]) == 0
    assert capsys.readouterr().out == "|1>\n"


def test_state_command_accepts_operator_words(capsys):
    assert cli_run(["state", "--word", "b[1,2]*b[2,1]", "--N", "3", "--n", "2"]) == 0
    assert capsys.readouterr().out == "|0,0>\n"


def test_vev_command(capsys):
    assert cli_run(["vev", "--expr", "b[1,2]*b[2,1]", "--N", "3", "--n", "1"]) == 0
    assert capsys.readouterr().out == "1\n"
    assert cli_run(["vev", "--expr", "c[2]", "--N", "3", "--n", "1"]) == 0
    assert capsys.readouterr().out == "0\n"


def test_verify_relations(capsys):
    assert cli_run(["verify", "--N", "2", "--n", "1", "--suite", "relations"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("verify N=2 n=1 backend=exact suite=relations")
    assert "4 checks, 0 failed: PASS" in out


def test_verify_failure_exit_code(monkeypatch, capsys):
    failing = [("relations", "commutation", (1, 2), lambda: False)]
    monkeypatch.setitem(suites.FAMILY_TASKS, "relations", lambda ctx, n: failing)
    assert cli_run(["verify", "--N", "2", "--n", "1", "--suite", "relations"]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_backend_environment_override(monkeypatch, capsys):
    monkeypatch.setenv("GCA_BACKEND", "float")
    args = ["verify", "--N", "2", "--n", "1", "--suite", "relations", "--format", "json"]
    assert cli_run(args) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["backend"] == "float"
    assert data["passed"]


def test_gauss_command(capsys):
    assert cli_run(["gauss", "--N", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("N")
    assert lines[1].split()[0] == "2"
    assert "yes" in lines[1]


def test_gauss_range_json_and_plot(tmp_path, capsys):
    chart = tmp_path / "gauss.png"
    assert cli_run(["gauss", "--N", "2", "--N-max", "8", "--format", "json", "--plot", str(chart)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert [row["N"] for row in data] == list(range(2, 9))
    assert [row["N"] for row in data if row["vanishes_a"]] == [2, 6]
    assert [row["N"] for row in data if row["vanishes_b"]] == [4, 8]
    assert chart.exists()


def test_gauss_rejects_empty_range(capsys):
    assert cli_run(["gauss", "--N", "8", "--N-max", "4"]) == 2
    assert last_error(capsys.readouterr().err)["error"] == "usage"


def test_render_to_file(tmp_path, capsys):
    path = tmp_path / "word.svg"
    assert cli_run(["render", "--word", "b[1,2]*b[2,3]", "-o", str(path)]) == 0
    assert path.read_text(encoding="utf-8").startswith("<?xml")
    assert capsys.readouterr().out == ""


def test_render_tikz_to_stdout(capsys):
    assert cli_run(["render", "--word", "(b[1,2]*b[2,3])|vac>", "--format", "tikz", "--pitch", "40"]) == 0
    out = capsys.readouterr().out
    assert "\\gcacaps{0}{0}" in out
    assert "\\gcapositive{1}{1}" in out
    assert "\\gcapositive{0}{2}" in out


def test_render_diagram_error(capsys):
    assert cli_run(["render", "--word", "c[1] + c[2]"]) == 2
    assert last_error(capsys.readouterr().err)["error"] == "diagram"


def test_config_command(capsys):
    assert cli_run(["config"]) == 0
    out = capsys.readouterr().out
    assert "Configuration is valid!" in out
    assert "Backend: from --backend (default exact)" in out
    assert "Random Words / Elements: 100 / 100" in out


@pytest.mark.parametrize("command", sorted(COMMANDS))
def test_help_exits_cleanly(command, capsys):
    assert cli_run([command, "--help"]) == 0
    assert capsys.readouterr().out
