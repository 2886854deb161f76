import io
import json
import math
import random
from fractions import Fraction as F

import jsonschema
import pytest
from hypothesis import given
from hypothesis import strategies as st

from centerfocus import cli
from centerfocus.center_conditions import SystemSpec
from centerfocus.cli import AnalysisRequest, ParseError, ValidationError, parse_text, render, run
from conftest import rationals

FOCUS = '{"n":2,"P1":{"p10":"1","p01":"0"},"Pn":{"2,0":"1","0,2":"-1"}}'
CENTER = '{"n":2,"P1":{"p10":"1"},"Pn":{"1,1":"1"}}'


@pytest.fixture
def schema():
    return cli.report_schema()


@pytest.fixture
def write(tmp_path):
    def _write(text, name="sys.json"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


def test_parse_examples():
    sys = parse_text(FOCUS)
    assert sys == SystemSpec.from_coeffs(2, 1, 0, {(2, 0): 1, (0, 2): -1})
    sys = parse_text(CENTER)
    assert sys.p01 == 0 and sys.Pn.coeffs == {(1, 1): 1}
    sys = parse_text('{"n": 3, "P1": {"p10": 2, "p01": "-3/4"}, "Pn": {"0,3": "6/4"}}')
    assert sys.p01 == F(-3, 4) and sys.p(0, 3) == F(3, 2)


@pytest.mark.parametrize(
    "text",
    [
        '{"n":2,"Pn":{"3,0":"1"}}',
        '{"n":1}',
        '{"P1":{}}',
        '{"n":2.0}',
        '{"n":2,"P1":{"p10":0.5}}',
        '{"n":2,"P1":{"p10":"1/0"}}',
        '{"n":2,"P1":{"p10":"one"}}',
        '{"n":2,"P1":{"p20":"1"}}',
        '{"n":2,"extra":1}',
        '{"n":2,"Pn":{"x,y":"1"}}',
        '{"n":2,"Pn":{"2,0":"1","2, 0":"2"}}',
    ],
)
def test_parse_rejects_invalid(text):
    with pytest.raises(ValidationError):
        parse_text(text)


def test_parse_error_has_position():
    with pytest.raises(ParseError, match=r"<input>:2:"):
        parse_text('{"n": 2,\n "P1": }')
    with pytest.raises(ParseError):
        parse_text("[1, 2]")


def test_parse_input_missing_file(tmp_path):
    with pytest.raises(ParseError):
        cli.parse_input(str(tmp_path / "nope.json"))


@given(st.integers(2, 7), rationals, rationals, st.data())
def test_render_roundtrip(n, a, b, data):
    pn = {(n - j, j): data.draw(rationals) for j in range(n + 1)}
    sys = SystemSpec.from_coeffs(n, a, b, pn)
    assert parse_text(render(sys)) == sys


def test_analyze_center(write, schema):
    report, code = run(AnalysisRequest("analyze", write(CENTER)))
    jsonschema.validate(report, schema)
    assert code == 0
    assert report["verdict"]["kind"] == "Center"
    assert report["composition"]["available"] and report["composition"]["coefficients"] == ["1"]
    assert all(v == [] for v in report["focal"]["values"].values())
    assert report["corollary_conditions"] == ["0", "0"]


def test_analyze_focus_numeric(write, schema):
    report, code = run(AnalysisRequest("analyze", write(FOCUS), numeric=True))
    jsonschema.validate(report, schema)
    assert code == 0
    assert report["verdict"]["text"] == "Focus (first nonzero moment j=2)"
    assert report["focal"]["values"]["5"] == [["-1/2", 1]]
    assert report["composition"]["available"] is False
    num = report["numeric"]
    assert num["agrees_with_symbolic"] and not num["center_confirmed"]
    assert num["focal_estimates"]["5"] == pytest.approx(-math.pi / 2, rel=0.01)
    assert report["timing"]["total"] > 0


@pytest.mark.parametrize("command", ["moments", "focal", "compose"])
def test_subcommands_validate(write, schema, command):
    report, code = run(AnalysisRequest(command, write(FOCUS), order=7))
    jsonschema.validate(report, schema)
    assert code == 0
    if command == "focal":
        assert max(map(int, report["focal"]["values"])) == 7


def test_degenerate_composition_reported(write, schema):
    report, code = run(AnalysisRequest("compose", write('{"n":2,"Pn":{"1,1":"1"}}')))
    jsonschema.validate(report, schema)
    assert code == 0 and report["composition"] == {"available": False, "reason": "P1 = 0"}


def test_analysis_error_exit_code(write, schema):
    report, code = run(AnalysisRequest("analyze", write('{"n":2,"Pn":{"3,0":"1"}}')))
    jsonschema.validate(report, schema)
    assert code == 1 and report["error"]["type"] == "ValidationError"


def test_numeric_error_exit_code(write):
    report, code = run(AnalysisRequest("analyze", write('{"n":2,"P1":{"p01":"12"}}'), numeric=True))
    assert code == 1 and report["error"]["type"] in ("NonFinite", "StepBudgetExceeded")


def test_request_validation():
    with pytest.raises(ValidationError):
        AnalysisRequest("plot")
    with pytest.raises(ValidationError):
        AnalysisRequest("analyze", order=1)
    with pytest.raises(ValidationError):
        AnalysisRequest("analyze", tol=0)


def test_selftest(schema):
    report, code = run(AnalysisRequest("selftest"))
    jsonschema.validate(report, schema)
    assert code == 0 and report["selftest_ok"]
    assert set(report["selftest"]) == {"lambda_closed_form", "generating_series", "harmonic_expansion"}


def test_selftest_failure_exit_code(monkeypatch):
    from centerfocus.selftest import SuiteResult

    monkeypatch.setattr(cli, "run_all", lambda seed=0: [SuiteResult("broken", 3, 1)])
    report, code = run(AnalysisRequest("selftest"))
    assert code == 2 and not report["selftest_ok"]


def test_main_text_output(write, capsys):
    assert cli.main(["analyze", "--input", write(FOCUS), "--format", "text", "--numeric"]) == 0
    out = capsys.readouterr().out
    assert "verdict: Focus (first nonzero moment j=2)" in out
    assert "V_5 = -1/2·π" in out
    assert cli.main(["analyze", "--input", write(CENTER), "--format", "text"]) == 0
    assert "verdict: Center" in capsys.readouterr().out


def test_main_stdin_json(monkeypatch, capsys, schema):
    monkeypatch.setattr("sys.stdin", io.StringIO(CENTER))
    assert cli.main(["moments", "--input", "-"]) == 0
    report = json.loads(capsys.readouterr().out)
    jsonschema.validate(report, schema)
    assert report["moments"] == [[], [], []]


def test_main_ladder_flag(write, capsys):
    ladder = ",".join(f"{c:.4f}" for c in [0.03 + 0.007 * i for i in range(10)])
    assert cli.main(["focal", "--input", write(FOCUS), "--numeric", "--ladder", ladder]) == 0
    report = json.loads(capsys.readouterr().out)
    assert len(report["numeric"]["ladder"]) == 10


def test_main_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["analyze", "--bogus"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        cli.main(["analyze", "--ladder", "a,b"])
    assert exc.value.code == 1
    assert cli.main(["analyze"]) == 1
    assert "required" in capsys.readouterr().err


def test_random_reports_validate(schema):
    rng = random.Random(1)
    from centerfocus.sampling import composition_center, random_system

    for n in range(2, 6):
        for sys in (random_system(rng, n), composition_center(rng, n)):
            report, code = run(AnalysisRequest("analyze"), spec=sys)
            assert code == 0
            jsonschema.validate(report, schema)
            assert parse_text(json.dumps(report["system"])) == sys
