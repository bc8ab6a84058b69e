import json
import subprocess
import sys
from fractions import Fraction

import jsonschema
import pytest
from hypothesis import given, settings

from qhaar.algebra import AlgElement, generator
from qhaar.cli import Command, CommandError, main, run
from qhaar.expr import ParseError, format_element, parse, parse_element, parse_scalar
from qhaar.haar import zeta
from qhaar.hopf import star
from qhaar.qcoeff import ONE, qpow
from qhaar.schemas import HAAR_CACHE, VERB_SCHEMAS

from strategies import elements

VALIDATOR = jsonschema.Draft202012Validator


# -- parser -----------------------------------------------------------------


def test_parse_examples():
    assert parse_element("a*d - q*b*c", 2) == AlgElement.scalar(2, 1)
    assert parse_element("-q*b*c", 2) == zeta()
    assert parse_element("u[1,2]'", 3) == star(generator(3, 1, 2))


def test_precedence():
    # ' binds tighter than ^, which binds tighter than *
    b = generator(2, 1, 2)
    assert parse_element("b'^2", 2) == star(b) * star(b)
    assert parse_element("2*b^2 + 1", 2) == (b * b).scale(2) + AlgElement.scalar(2, 1)
    assert parse_element("(a + b)'", 2) == parse_element("a' + b'", 2)
    assert parse_element("q^-2 * b", 2) == b.scale(qpow(-2))
    assert parse_element("b/(1 + q^2)", 2) == b.scale(ONE / (qpow(2) + ONE))


@pytest.mark.parametrize(
    "text, n",
    [("a b", 2), ("a*", 2), ("u[3,1]", 2), ("a", 3), ("b^-1", 2), ("b/a", 2), ("(a", 2), ("a $ b", 2)],
)
def test_parse_errors(text, n):
    with pytest.raises((ParseError, IndexError, ValueError)):
        parse_element(text, n)


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse("a * * b", 2)
    assert info.value.pos == 4


def test_parse_scalar():
    assert parse_scalar("7/3").rational_value() == Fraction(7, 3)
    assert parse_scalar("q^2/(q^2 + 1)") == qpow(2) / (qpow(2) + ONE)
    with pytest.raises(ParseError):
        parse_scalar("b")


@pytest.mark.parametrize("n", [2, 3])
def test_print_parse_round_trip(n):
    @settings(max_examples=40, deadline=None)
    @given(elements(n, max_len=3))
    def check(x):
        assert parse_element(format_element(x), n) == x

    check()


# -- run ---------------------------------------------------------------------


def test_run_haar_zeta():
    out, status = run(Command("haar", 2, "-q*b*c"))
    assert status == 0
    assert parse_scalar(out) == (ONE - qpow(-2)) / (ONE - qpow(-4))


def test_run_grade_b():
    out, status = run(Command("grade", 2, "b"))
    lines = out.splitlines()
    assert lines[0] == "[1, -1]"
    assert lines[1].startswith("note:")
    out, _ = run(Command("grade", 2, "a"))
    assert out == "[1, 1]"


def test_run_verify_n2():
    out, status = run(Command("verify", 2))
    assert status == 0
    assert "[FAIL]" not in out
    assert out.count("note:") >= 2


def test_run_needs_expression():
    with pytest.raises(CommandError):
        run(Command("nf", 2))
    with pytest.raises(CommandError):
        run(Command("bogus", 2, "a"))


CASES = [
    ("nf", 2, "d*a"),
    ("haar", 2, "b*b'"),
    ("grade", 2, "a + b + b*c"),
    ("cop", 2, "b*c"),
    ("counit", 3, "u[1,1]*u[2,2]"),
    ("antipode", 3, "u[1,2]"),
    ("star", 2, "b"),
    ("theta", 3, "u[1,1]"),
    ("norms", 3, None),
    ("verify", 2, None),
]


@pytest.mark.parametrize("verb, n, expr", CASES)
@pytest.mark.parametrize("q0", [None, "3/2"])
def test_json_output_validates(verb, n, expr, q0, capsys):
    argv = [verb] + ([expr] if expr else []) + ["--N", str(n), "--format", "json"]
    if q0:
        argv += ["--q", q0]
    assert main(argv) == 0
    obj = json.loads(capsys.readouterr().out)
    VALIDATOR(VERB_SCHEMAS[verb]).validate(obj)
    if q0 and verb != "verify":
        assert '"num"' not in json.dumps(obj)


def test_q_evaluates_text(capsys):
    assert main(["haar", "-q*b*c", "--N", "2", "--q", "2"]) == 0
    assert capsys.readouterr().out.strip() == "4/5"


def test_leading_minus_expression(capsys):
    assert main(["nf", "--N", "2", "-b*c"]) == 0
    assert capsys.readouterr().out.strip() == "-b*c"


def test_errors_exit_nonzero(capsys):
    assert main(["nf", "u[3,3]", "--N", "2"]) == 1
    assert "error:" in capsys.readouterr().err
    assert main(["haar", "b^9*c^9", "--N", "2"]) == 1
    assert "guard" in capsys.readouterr().err
    assert main(["haar", "b^9*c^9", "--N", "2", "--max-degree", "18"]) == 0
    assert main(["norms", "--N", "1"]) == 1
    assert main(["haar", "b*c", "--N", "2", "--q", "0"]) == 1


def test_cache_flag(tmp_path, capsys):
    path = tmp_path / "cache.json"
    assert main(["haar", "(b*c)^2", "--N", "2", "--cache", str(path)]) == 0
    first = capsys.readouterr().out
    obj = json.loads(path.read_text())
    VALIDATOR(HAAR_CACHE).validate(obj)
    assert obj["degree"] == 4
    assert main(["haar", "(b*c)^2", "--N", "2", "--cache", str(path)]) == 0
    assert capsys.readouterr().out == first
    assert main(["haar", "u[1,2]*u[2,1]", "--N", "3", "--cache", str(path)]) == 1
    assert "N = 2" in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qhaar", "star", "b", "--N", "2"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "-q*c"
