import json
import subprocess
import sys
from importlib import resources

import pytest

from ohmrush.cli import main

SCENARIOS = ["artinian", "integers", "nthroot", "semilocal"]


def scenario_path(name):
    return str(resources.files("ohmrush").joinpath(f"scenarios/{name}.yaml"))


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_content(capsys):
    code, out, _ = run(capsys, "content", "6*x^2 + 4")
    assert code == 0
    assert json.loads(out)["result"]["content"] == "( 2 )"


def test_gaussian_text(capsys):
    code, out, _ = run(capsys, "gaussian", "--format", "text", "--ring", "Q[a,b]", "a*x + b", "b*x + a")
    assert code == 0
    assert "gaussian: false" in out.splitlines()
    assert "dm_exponent: 2" in out.splitlines()


def test_content_mod_over_prime_field(capsys):
    code, out, _ = run(capsys, "content-mod", "--ring", "GF(5)[a,b]", "a*x + b", "(a - b)")
    assert code == 0
    assert json.loads(out)["result"]["content"] != "( 1 )"


def test_localize(capsys):
    code, out, _ = run(capsys, "localize", "--prime", "3", "12*x + 18")
    assert code == 0
    assert json.loads(out)["result"]["content"] == "( 3 )"


def test_valuation_commands(capsys):
    code, out, _ = run(capsys, "value-group-check", "--group", "rational:1", "--target-group", "rational:2")
    result = json.loads(out)["result"]
    assert code == 0 and result["is_content_extension"] is False
    assert result["witness"]["confirmed"] is True
    code, out, _ = run(capsys, "valuation-content", "--group", "lex:2", "--matrix", "1,0;3,1",
                       "x^(1,2) + x^(2,0)")
    assert code == 0
    code, out, _ = run(capsys, "spectra", "--group", "lex:3")
    assert code == 0
    assert json.loads(out)["result"]["dimension_bound"]["bound"] == 4


def test_semilocal(capsys):
    code, out, _ = run(capsys, "semilocal", "--branch", "lex:2", "--branch", "lex:2", "1,0", "0,0")
    result = json.loads(out)["result"]
    assert code == 0 and result["spec_R_size"] == 5


def test_dm_bound_error_exits_one(capsys):
    code, out, _ = run(capsys, "dm-exponent", "--ring", "GF(5)[a,b]/(a^2, b^2)", "--bound", "1",
                       "a*x + b", "a*x - b")
    assert code == 1
    assert json.loads(out)["error"]["type"] == "DMBoundExceeded"


def test_parse_error_exits_two(capsys):
    code, out, _ = run(capsys, "content", "6*x^+")
    err = json.loads(out)["error"]
    assert code == 2 and err["type"] == "ParseError" and err["position"] == 4


def test_usage_error_exits_two(capsys):
    code, out, _ = run(capsys, "gaussian", "x")
    assert code == 2
    assert json.loads(out)["error"]["type"] == "UsageError"


def test_unknown_example_exits_two(capsys):
    code, out, _ = run(capsys, "paper-examples", "ex_nothing")
    assert code == 2
    assert json.loads(out)["error"]["type"] == "UnknownExampleName"


def test_text_errors_go_to_stderr(capsys):
    code, out, err = run(capsys, "content", "--format", "text", "1/")
    assert code == 2 and out == "" and "ParseError" in err


def test_paper_examples_table(capsys):
    code, out, _ = run(capsys, "paper-examples", "--format", "text", "--samples", "20")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 8 and all(line.startswith("PASS") for line in lines)


@pytest.mark.parametrize("name", SCENARIOS)
def test_packaged_scenarios_pass(capsys, name):
    code, out, _ = run(capsys, "run", scenario_path(name))
    report = json.loads(out)
    assert code == 0, report
    assert report["summary"]["ok"] and report["summary"]["failed"] == 0


def test_scenario_failure_exits_one(capsys, tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text(
        "ring: GF(5)[a,b]/(a^2, b^2)\n"
        "extension: {type: polynomial}\n"
        "checks:\n"
        "  - command: dm-exponent\n"
        "    args: {f: a*x + b, g: a*x - b, bound: 1}\n"
        "  - command: content\n"
        "    args: {f: a*x + b}\n"
        "    expect: {content: '( 1 )'}\n")
    code, out, _ = run(capsys, "run", str(path))
    report = json.loads(out)
    assert code == 1
    assert [c["status"] for c in report["checks"]] == ["error", "fail"]


def test_empty_scenario_passes(capsys, tmp_path):
    path = tmp_path / "empty.yaml"
    path.write_text("name: empty\nchecks: []\n")
    code, out, _ = run(capsys, "run", str(path))
    assert code == 0
    assert json.loads(out)["summary"]["total"] == 0


def test_scenario_schema_error_exits_two(capsys, tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text("ring: Z\nbogus: 1\n")
    code, out, _ = run(capsys, "run", str(path))
    assert code == 2
    assert json.loads(out)["error"]["type"] == "ParseError"


def test_out_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "content", "--out", str(target), "4*x + 6")
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["result"]["content"] == "( 2 )"


def test_output_is_byte_identical():
    argv = [sys.executable, "-m", "ohmrush.cli", "run", scenario_path("semilocal")]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second
    laws_argv = [sys.executable, "-m", "ohmrush.cli", "laws", "--samples", "20", "purity", "scalar"]
    assert (subprocess.run(laws_argv, capture_output=True).stdout
            == subprocess.run(laws_argv, capture_output=True).stdout)


def test_timing_is_opt_in(capsys):
    _, out, _ = run(capsys, "laws", "--samples", "5", "scalar")
    assert "seconds" not in out
    _, out, _ = run(capsys, "laws", "--samples", "5", "--timing", "scalar")
    assert "seconds" in out
