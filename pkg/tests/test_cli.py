import json

import pytest

from cubicskein import cli
from cubicskein.golden import golden_value
from cubicskein.relations import hopf_relation
from cubicskein.ring import RingFraction, format_poly, parse_poly, trivial_component
from cubicskein.rta import eval_code
from cubicskein.tangle_model import Closure


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    body = json.loads(out)
    assert body["schema"] == cli.SCHEMA and body["command"] == argv[0]
    return body


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "--code", "[5]", "--closure", "num")
    assert code == 0
    assert RingFraction(parse_poly(out.strip())) == golden_value("cinquefoil")
    _, out, _ = run(capsys, "eval", "--code", "[0]", "--closure", "den")
    assert parse_poly(out.strip()) == trivial_component()
    body = run_json(capsys, "eval", "--pretzel", "P(1,1,1)")
    assert parse_poly(body["value"]) == eval_code((-3,), Closure.Numerator)


def test_eval_usage_errors(capsys):
    assert run(capsys, "eval")[0] == 1
    assert run(capsys, "eval", "--code", "[3,0,2]")[0] == 1
    assert run(capsys, "eval", "--code", "[1]", "--pretzel", "P(1)")[0] == 1
    assert run(capsys, "eval", "--pretzel", "P(1)", "--closure", "den")[0] == 1


def test_relation(capsys):
    body = run_json(capsys, "relation", "--a", "[2,2]", "--b", "[-2,-2]", "--divide-by", "hopf")
    assert body["divisible"] is True
    assert parse_poly(body["quotient"]) == 1 - parse_poly("b0^-1*b1*b2*b3^-1")
    _, out, _ = run(capsys, "relation", "--a", "[3]", "--b", "[3]")
    assert out.strip() == "0"
    body = run_json(capsys, "relation", "--a", "[2,-2]", "--b", "[-3]", "--scale-a", "a",
                    "--divide-by", "R_Hopf")
    assert body["divisible"] is False
    code, out, _ = run(capsys, "relation", "--a", "[2,-2]", "--b", "[-3]", "--scale-a", "a",
                       "--divide-by", "hopf", "--require-divisible")
    assert code == 2
    assert run(capsys, "relation", "--a", "[1]", "--b", "[1]", "--divide-by", "nowhere")[0] == 1


def test_divide(capsys, tmp_path):
    hopf = format_poly(hopf_relation())
    body = run_json(capsys, "divide", "--num", format_poly(hopf_relation() * 7), "--by", "hopf")
    assert body["quotient"] == "7"
    f = tmp_path / "d.txt"
    f.write_text(hopf)
    body = run_json(capsys, "divide", "--num", hopf, "--by", str(f))
    assert body["quotient"] == "1"
    body = run_json(capsys, "divide", "--num", "b1 + 1", "--den", "b2")
    assert body["divisible"] is False
    assert run(capsys, "divide", "--num", "b1", "--den", "b2", "--require-divisible")[0] == 2
    assert run(capsys, "divide", "--num", "b1")[0] == 1
    assert run(capsys, "divide", "--num", "b1^-1", "--den", "b2")[0] == 1


def test_mirror(capsys):
    body = run_json(capsys, "mirror", "--code", "[3]")
    assert parse_poly(body["mirror"]) == eval_code((-3,))
    body = run_json(capsys, "mirror", "--poly", "t")
    assert parse_poly(body["mirror"]) == trivial_component()
    assert run(capsys, "mirror")[0] == 1


def test_torus(capsys):
    body = run_json(capsys, "torus", "--n", "2", "--ambient", "annulus")
    assert set(body["combo"]) == {"D1", "D0", "D-1", "scalar"}
    body = run_json(capsys, "torus", "--n", "5")
    assert parse_poly(body["value"]) == eval_code((5,), Closure.Numerator)
    assert run(capsys, "torus", "--n", "1")[0] == 1


def test_pretzel(capsys):
    body = run_json(capsys, "pretzel", "P(1,-1)")
    assert parse_poly(body["value"]) == trivial_component() ** 2
    assert body["zero_with_inf"] == []
    code, out, _ = run(capsys, "pretzel", "P(0,2)")
    assert code == 0 and "warning" in out
    assert run(capsys, "pretzel", "P()")[0] == 1


def test_reduce3(capsys):
    body = run_json(capsys, "reduce3", "--word", "S1 S1i")
    assert body["combo"] == {"e": "1"}
    body = run_json(capsys, "reduce3", "--word", "U1 S2 U1")
    assert body["combo"] == {"U1": "a"}
    assert run(capsys, "reduce3", "--word", "S3")[0] == 1


def test_color(capsys):
    _, out, _ = run(capsys, "color", "--code", "[3]", "--p", "3")
    assert out.strip() == "9"
    assert run(capsys, "color", "--code", "[3]", "--p", "4")[0] == 1


def test_scan(capsys, tmp_path):
    out_file = tmp_path / "r.json"
    code, out, _ = run(capsys, "scan", "--check", "hopf-divisibility", "--max-len", "2",
                       "--max-entry", "2", "--out", str(out_file), "--workers", "1")
    assert code == 0 and "pass" in out
    report = json.loads(out_file.read_text())
    assert report["verdict"] == "pass" and report["counterexamples"] == []
    assert run(capsys, "scan", "--check", "hopf-divisibility", "--max-len", "0")[0] == 1
    code, out, _ = run(capsys, "scan", "--check", "col7", "--max-len", "1", "--max-entry", "8",
                       "--format", "json", "--no-timing", "--workers", "1")
    assert code == 0 and json.loads(out)["counterexamples"] == []


def test_catalog(capsys):
    body = run_json(capsys, "catalog")
    assert [r["name"] for r in body["relations"]][:2] == ["R_Hopf", "R_t"]
    body = run_json(capsys, "catalog", "--name", "R_C")
    assert "coefficients" in body["relations"][0]
    assert run(capsys, "catalog", "--name", "R_zzz")[0] == 1


def test_exit_codes(capsys, monkeypatch):
    assert run(capsys)[0] == 1
    assert run(capsys, "frobnicate")[0] == 1
    assert run(capsys, "--version")[0] == 0

    def boom(args):
        raise RuntimeError("unexpected")
    monkeypatch.setattr(cli, "cmd_color", boom)
    code, _, err = run(capsys, "color", "--code", "[3]", "--p", "3")
    assert code == 3 and "internal error" in err


@pytest.mark.parametrize("argv", [
    ("eval", "--code", "[2,1,1,2]", "--format", "json"),
    ("scan", "--check", "pretzel-bridge", "--max-entry", "2", "--no-timing", "--format", "json"),
    ("reduce3", "--word", "S1i S2 S1i S2"),
])
def test_byte_identical_output(capsys, argv):
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
