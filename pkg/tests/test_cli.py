import io
import json
import subprocess
import sys

import pytest
from hypothesis import given

from conftest import j3s
from j3 import ALPHA, BETA, ONE, ZERO, J3, J3Class
from j3.basis import AbgCoords, DirectSum
from j3.cli import run_command
from j3.cli.render import fmt_j3, from_json, to_json
from j3.cli.parser import parse
from j3.cli.evaluate import evaluate
from j3.equations import Family, SolutionSet, solve_linear, solve_quadratic, sqrt_real
from j3.transcend import CylCoords, polar_decompose, to_cyl


def run(*argv, stdin=None):
    out = io.StringIO()
    code = run_command(list(argv), out=out, inp=io.StringIO(stdin) if stdin is not None else None)
    return code, out.getvalue()


def test_eval_roundtrip_example():
    assert run("eval", "exp(log(2 + 1j + 1jj))") == (0, "2 + 1j + 1jj\n")


def test_classify_example():
    assert run("classify", "1 - 1j + 1jj") == (0, "ZeroDivisorL\n")


def test_solve_quadratic_square_roots_of_unity():
    code, out = run("solve-quadratic", "--p", "0", "--q", "-1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "4 solutions:"
    got = {tuple(round(x, 9) for x in evaluate(parse(l)).value) for l in lines[1:]}
    want = {tuple(round(x, 9) for x in v) for v in sqrt_real(1)}
    assert got == want


def test_exit_codes():
    assert run("eval", "1 / (1 + 1j)")[0] == 1
    assert run("log", "j")[0] == 1
    code, out = run("eval", "1 +")
    assert code == 2 and "column 4" in out
    assert run()[0] == 2
    assert run("frobnicate")[0] == 2


def test_json_errors():
    code, out = run("eval", "1 +", "--json")
    obj = json.loads(out)
    assert code == 2 and obj["error"]["code"] == "parse_error" and obj["error"]["column"] == 4
    code, out = run("eval", "1/(1+1j)", "--json")
    obj = json.loads(out)
    assert code == 1 and obj["error"]["code"] == "division_by_zero_divisor"


def test_precision_flag():
    assert run("eval", "pi", "--precision", "4") == (0, "3.142\n")
    assert run("eval", "alpha", "--precision", "3") == (0, "0.333 - 0.333j + 0.333jj\n")


def test_tol_flag():
    assert run("classify", "1 + 1j + 0.001jj")[1] == "Invertible\n"
    assert run("classify", "1 + 1j + 0.001jj", "--tol", "0.01")[1] == "ZeroDivisorM\n"


def test_oracle_flag():
    code, out = run("eval", "(2 + 1j + 1jj) * (1 - 1j + 3jj)", "--oracle")
    value, delta = out.splitlines()
    assert code == 0 and delta.startswith("oracle_delta = ")
    assert float(delta.split("=")[1]) <= 1e-12
    obj = json.loads(run("eval", "inv(2+1j+1jj)", "--oracle", "--json")[1])
    assert obj["oracle_delta"] <= 1e-12


def test_solve_linear_output():
    code, out = run("solve-linear", "--s", "1 - 1j + 1jj", "--t", "3 - 3j + 3jj")
    assert code == 0 and out.startswith("infinitely many solutions (plane):")
    code, out = run("solve-linear", "--s", "1 + 1j", "--t", "1 - 1j + 1jj")
    assert out == "no solutions\n"


def test_general_quadratic_and_sqrt():
    code, out = run("solve-quadratic", "--a", "1 + 1j", "--b", "0", "--c", "1")
    assert code == 0 and out == "no solutions\n"
    code, out = run("solve-quadratic", "--a", "1 - 1j + 1jj", "--b", "0", "--c", "1")
    assert code == 1 and "only handled" in out
    assert run("sqrt", "4")[1].startswith("4 solutions:")
    assert run("sqrt", "--", "-1")[1] == "no solutions\n"


def test_decompose_and_exp_log():
    code, out = run("decompose", "1jj")
    assert code == 0 and out.splitlines()[2].startswith("r = 1, theta = 2.09439510239")
    assert run("exp", "0")[1] == "1 + 0j + 0jj\n"
    assert run("log", "1", "--branch", "1")[1] == run("eval", "2*pi*gamma")[1]


def test_repl_session():
    script = "\n".join(
        [
            "# comment",
            "let x = 2 + 1j + 1jj",
            "det(x)",
            "_ * 2",
            "1 +",
            "let 3 = 4",
            "inv(x) * x",
            "quit",
            "never reached",
        ]
    )
    code, out = run("repl", stdin=script)
    assert code == 0
    assert out.splitlines() == [
        "2 + 1j + 1jj",
        "14",
        "28",
        "error: column 4: unexpected 'end of input' (expected number, identifier, '(', '-')",
        "error: column 1: expected 'let name = expr'",
        "1 + 0j + 0jj",
    ]


def test_main_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "j3", "eval", "j*j*j"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and proc.stdout == "-1 + 0j + 0jj\n"


# -- rendering ----------------------------------------------------------------------


@given(j3s)
def test_display_is_valid_input(s):
    back = evaluate(parse(fmt_j3(s, 17))).value
    back = back if isinstance(back, J3) else J3(back, 0, 0)
    assert back.isclose(s, 1e-12 * (1 + max(map(abs, s))))


def test_display_chops_tiny_components():
    assert fmt_j3(J3(1, 1e-13, -1e-11)) == "1 + 0j - 1e-11jj"
    assert fmt_j3(J3(-0.0, 0, 0)) == "0 + 0j + 0jj"


@pytest.mark.parametrize(
    "value",
    [
        2.5,
        J3(1, -2, 3.25),
        AbgCoords(1, 2, 3),
        J3Class.ZERO_DIVISOR_M,
        CylCoords(1, 0.5, -2),
        DirectSum(1, 2, -3),
        sqrt_real(1),
        SolutionSet.empty(),
        solve_linear(J3(1, -1, 1), J3(3, -3, 3)),
        solve_quadratic(J3(1, 1, 0), ZERO, J3(2, 3, 1)),
        SolutionSet.line(Family(ONE, (ALPHA,))),
        polar_decompose(J3(2, 1, 1)),
    ],
)
def test_json_roundtrip(value):
    obj = to_json(value)
    assert from_json(json.loads(json.dumps(obj))) == value


def test_json_shapes():
    assert to_json(BETA)["type"] == "j3"
    obj = to_json(polar_decompose(ONE))
    assert set(obj) == {"type", "p", "u", "cyl", "abg"}
    assert to_json(to_cyl(ONE)) == {"type": "cyl", "r": 1.0, "theta": 0.0, "a": 1.0}
