import json
import subprocess
import sys
from fractions import Fraction

import pytest

from recsquares.cli import main
from recsquares.dsl import ratfun_from_json
from recsquares.poly import Poly
from recsquares.ratfun import RatFun, ratfun_equal

FIB_SRC = "spec:a(n) = a(n-1) + a(n-2); a(0)=0; a(1)=1"
PELL_SRC = "spec:a(n) = 2*a(n-1) + a(n-2); a(0)=1; a(1)=1"
TRIB_SRC = "spec:a(n) = a(n-1) + a(n-2) + a(n-3); a(0)=0; a(1)=1; a(2)=1"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gf_plain(capsys):
    assert run(capsys, "gf", "--spec", FIB_SRC) == (0, "(x - x^2)/(1 - 2*x - 2*x^2 + x^3)\n", "")
    code, out, _ = run(capsys, "gf", "--spec", PELL_SRC)
    assert out == "(1 - 4*x - x^2)/(1 - 5*x - 5*x^2 + x^3)\n"


def test_gf_from_file(tmp_path, capsys):
    path = tmp_path / "fib.rec"
    path.write_text("a(n) = a(n-1) + a(n-2)\na(0) = 0\na(1) = 1\n", encoding="utf-8")
    code, out, _ = run(capsys, "gf", "--spec", str(path), "--format", "json")
    assert code == 0
    assert json.loads(out) == {"numerator": ["0", "1", "-1"], "denominator": ["1", "-2", "-2", "1"], "variable": "x"}


def test_missing_file(capsys):
    code, out, err = run(capsys, "gf", "--spec", "/nonexistent/spec.rec")
    assert code == 2 and out == "" and "cannot read" in err


def test_malformed_spec(capsys):
    code, out, err = run(capsys, "gf", "--spec", "spec:a(n) = a(n-1) +; a(0)=1")
    assert code == 2
    assert out == ""
    assert "<inline>:1:16:" in err


def test_series(capsys):
    code, out, _ = run(capsys, "series", "--spec", FIB_SRC, "--terms", "6")
    assert out.split() == ["0", "1", "1", "4", "9", "25", "64"]
    code, out, _ = run(capsys, "series", "--spec", PELL_SRC, "--terms", "5")
    assert out.split() == ["1", "1", "9", "49", "289", "1681"]
    code, out, _ = run(capsys, "series", "--spec", "spec:a(n)=a(n-1)-a(n-2);a(0)=-2/3;a(1)=1", "--terms", "0")
    assert out.split() == ["4/9"]


def test_series_negative_terms(capsys):
    code, _, err = run(capsys, "series", "--spec", FIB_SRC, "--terms", "-1")
    assert code == 2 and "nonnegative" in err


@pytest.mark.parametrize("src", [FIB_SRC, TRIB_SRC, PELL_SRC])
def test_verify_passes(capsys, src):
    code, out, _ = run(capsys, "verify", "--spec", src)
    assert code == 0
    assert out.splitlines() == ["PASS structure", "PASS squares", "PASS f-system", "PASS lemmas"]


def test_verify_reports_first_divergence(capsys, monkeypatch):
    from recsquares import core

    real = core.delta_top_row
    monkeypatch.setattr(core, "delta_top_row", lambda spec, aux, j: -real(spec, aux, j))
    code, out, _ = run(capsys, "verify", "--spec", FIB_SRC, "--terms", "40")
    assert code == 1
    assert "FAIL squares: first mismatch at n=" in out
    assert "PASS lemmas" in out


def test_verify_needs_a_term(capsys):
    code, _, err = run(capsys, "verify", "--spec", FIB_SRC, "--terms", "0")
    assert code == 2 and "at least 1" in err


def test_weighted(capsys):
    code, out, _ = run(capsys, "weighted", "--spec", "spec:a(n) = a(n-1); a(0) = 1")
    assert out == "(x)/(1 - 2*x + x^2)\n"
    code, out, _ = run(capsys, "weighted", "--spec", TRIB_SRC, "--format", "json")
    expected = RatFun.of(
        Poly([0, 1, -2, 2, 12, 0, 8, 2, 4, 3, 2]),
        (Poly([-1, -1, -1, 1]) * Poly([-1, 3, 1, 1])) ** 2,
    )
    assert ratfun_equal(ratfun_from_json(out), expected)


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--family", "fibonacci", "--k", "3", "--format", "json")
    expected = RatFun.of(Poly([0, 1, -1, -1, -1]), Poly([1, 1, 1, -1]) * Poly([1, -3, -1, -1]))
    assert code == 0 and ratfun_equal(ratfun_from_json(out), expected)
    code, out, _ = run(capsys, "table", "--family", "pell", "--k", "2")
    assert out == "(1 - 4*x - x^2)/(1 - 5*x - 5*x^2 + x^3)\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["table", "--family", "fibonacci", "--k", "1"],
        ["table", "--family", "lucas", "--k", "3"],
        ["gf"],
        ["frobnicate"],
        ["gf", "--spec", FIB_SRC, "--format", "xml"],
    ],
)
def test_input_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err


def test_non_minimal_order_warns(capsys):
    code, out, err = run(capsys, "gf", "--spec", "spec:a(n) = a(n-1) + 0*a(n-2); a(0)=1; a(1)=1")
    assert code == 0
    assert "not minimal" in err
    assert out == "(1)/(1 - x)\n"


def test_deterministic_output(capsys):
    outs = {run(capsys, "gf", "--spec", TRIB_SRC, "--format", "latex")[1] for _ in range(3)}
    assert len(outs) == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "recsquares", "series", "--spec", FIB_SRC, "--terms", "3"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert [Fraction(s) for s in proc.stdout.split()] == [0, 1, 1, 4]
