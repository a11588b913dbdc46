"""
Tests the command line tool.
"""
import json

import pytest
from click.testing import CliRunner

from bigradedpd.cli import tool
from bigradedpd.cli.tool import EXIT_CAP, EXIT_INVALID, EXIT_MISMATCH, EXIT_OK, cli
from bigradedpd.complex import Bifiltration, write_bifiltration

MERGE_SQUARE_LINES = [
    "d 0 1 1 2 4 4",
    "d 0 1 2 1 4 4",
    "d 0 1 2 2 3 3",
    "d 0 -1 2 2 4 4",
    "d 0 1 4 4 4 4",
]


@pytest.fixture()
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture()
def merge_file(tmp_path, merge_square: Bifiltration):
    path = tmp_path / "merge.bif"
    path.write_text(write_bifiltration(merge_square), encoding="utf-8")
    return str(path)


@pytest.fixture()
def shared_file(tmp_path, shared_corners: Bifiltration):
    path = tmp_path / "shared.bif"
    path.write_text(write_bifiltration(shared_corners), encoding="utf-8")
    return str(path)


def _write(tmp_path, name: str, text: str) -> str:
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_compute(runner: CliRunner, merge_file: str):
    result = runner.invoke(cli, ["compute", merge_file])
    assert result.exit_code == EXIT_OK, result.output
    assert result.output.splitlines() == MERGE_SQUARE_LINES


def test_compute_jsonl(runner: CliRunner, merge_file: str):
    result = runner.invoke(cli, ["compute", "--format", "jsonl", "-d", "0", merge_file])
    assert result.exit_code == EXIT_OK, result.output
    records = [json.loads(line) for line in result.output.splitlines()]
    assert len(records) == 5
    assert records[0] == {"dim": 0, "mult": 1, "lower": ["1", "2"], "upper": ["4", "4"]}


def test_compute_skips_oracle(runner: CliRunner, merge_file: str, monkeypatch):
    def refuse(*args, **kwargs):
        raise AssertionError("the oracle must not run")

    monkeypatch.setattr(tool, "brute_diagram", refuse)
    result = runner.invoke(cli, ["compute", merge_file])
    assert result.exit_code == EXIT_OK


def test_oracle(runner: CliRunner, merge_file: str):
    result = runner.invoke(cli, ["oracle", merge_file])
    assert result.exit_code == EXIT_OK, result.output
    assert result.output.splitlines() == MERGE_SQUARE_LINES


def test_degenerate_input(runner: CliRunner, shared_file: str):
    computed = runner.invoke(cli, ["compute", shared_file])
    assert computed.exit_code == EXIT_OK
    assert computed.output == runner.invoke(cli, ["oracle", shared_file]).output
    assert runner.invoke(cli, ["compute", "--strict", shared_file]).exit_code == EXIT_INVALID


def test_diff(runner: CliRunner, merge_file: str, shared_file: str):
    result = runner.invoke(cli, ["diff", merge_file, shared_file])
    assert result.exit_code == EXIT_OK, result.output
    assert result.output.splitlines() == ["{}: ok".format(merge_file),
                                          "{}: ok".format(shared_file)]


def test_diff_reports_mismatch(runner: CliRunner, merge_file: str):
    result = runner.invoke(cli, ["diff", "--corrupt", merge_file])
    assert result.exit_code == EXIT_MISMATCH
    assert "mismatch in dimension 0 at [(1, 2), (4, 4)]: sweep 2, oracle 1" in result.output


def test_cap(runner: CliRunner, merge_file: str):
    assert runner.invoke(cli, ["oracle", "--cap", "3", merge_file]).exit_code == EXIT_CAP
    assert runner.invoke(cli, ["diff", "--cap", "3", merge_file]).exit_code == EXIT_CAP


@pytest.mark.parametrize("args", [
    ["--field", "4"],
    ["--dim", "5"],
])
def test_bad_options(runner: CliRunner, merge_file: str, args):
    assert runner.invoke(cli, ["compute"] + args + [merge_file]).exit_code == EXIT_INVALID


def test_parse_error(runner: CliRunner, tmp_path):
    path = _write(tmp_path, "broken.bif", "0 dim 0 vertices 0 corners (1,1)\nnonsense\n")
    result = runner.invoke(cli, ["compute", path])
    assert result.exit_code == EXIT_INVALID
    assert "line 2" in result.output


def test_empty_file(runner: CliRunner, tmp_path):
    path = _write(tmp_path, "empty.bif", "")
    result = runner.invoke(cli, ["compute", path])
    assert result.exit_code == EXIT_OK
    assert result.output == ""


def test_validate(runner: CliRunner, merge_file: str, shared_file: str, tmp_path):
    result = runner.invoke(cli, ["validate", merge_file])
    assert result.exit_code == EXIT_OK
    assert result.output == "valid: m=4 n=4 non-degenerate\n"
    assert "degenerate" in runner.invoke(cli, ["validate", shared_file]).output

    path = _write(tmp_path, "bad.bif", "0 dim 0 vertices 0 corners (2,2)\n"
                                       "1 dim 0 vertices 1 corners (1,1)\n"
                                       "2 dim 1 vertices 0 1 corners (1,3)\n")
    result = runner.invoke(cli, ["validate", path])
    assert result.exit_code == EXIT_INVALID
    assert "simplex 2: face monotonicity" in result.output


def test_bench_is_deterministic(runner: CliRunner, tmp_path):
    args = ["bench", "--vertices", "3", "--instances", "2", "--no-timings", "--oracle"]
    first = runner.invoke(cli, args + ["--emit", str(tmp_path)])
    assert first.exit_code == EXIT_OK, first.output
    second = runner.invoke(cli, args)
    assert first.output == second.output

    lines = first.output.splitlines()
    assert lines[0] == "vertices,instance,m,n,C,transpositions,sweep_time,oracle_time"
    assert len(lines) == 3
    assert lines[1].startswith("3,0,")
    assert lines[1].endswith(",,")
    assert sorted(p.name for p in tmp_path.iterdir()) == ["v3_000.bif", "v3_001.bif"]


def test_bench_nested(runner: CliRunner):
    result = runner.invoke(cli, ["bench", "--vertices", "4", "--instances", "1", "--nested"])
    assert result.exit_code == EXIT_OK, result.output
    row = result.output.splitlines()[1].split(",")
    assert row[0] == "4"
    assert row[6] != ""


def test_plot(runner: CliRunner, merge_file: str, tmp_path):
    result = runner.invoke(cli, ["plot", "--curves", merge_file])
    assert result.exit_code == EXIT_OK, result.output
    assert result.output.startswith("<svg ")
    assert result.output.count("<circle ") == 5
    assert "polyline" in result.output

    out = tmp_path / "merge.svg"
    assert runner.invoke(cli, ["plot", "-o", str(out), merge_file]).exit_code == EXIT_OK
    assert out.read_text(encoding="utf-8").rstrip().endswith("</svg>")
