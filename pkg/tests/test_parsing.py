import random

import pytest

from qsuperplane.algebras import ALGEBRA_NAMES, build
from qsuperplane.parsing import BinOp, EvaluationError, Gen, Num, ParseError, Pow, parse, parse_dual, parse_element
from qsuperplane.scalars import Q


def test_ast_shape():
    node = parse("2*x^-1 - theta", {"x", "theta"})
    assert node == BinOp("-", BinOp("*", Num(2), Pow(Gen("x"), -1)), Gen("theta"))


@pytest.mark.parametrize(
    "text,expected",
    [("x*theta - q*theta*x", "0"), ("x^-1*x", "1"), ("theta^2", "0"), ("theta*x", "(1/q)*x*theta")],
)
def test_normalize_examples(kq, text, expected):
    assert str(parse_element(text, kq)) == expected


def test_precedence(kq):
    x = kq.gen("x")
    assert parse_element("1/q^2*x", kq) == x * Q**-2
    assert parse_element("-x^2 + 3", kq) == -(x * x) + 3
    assert parse_element("(x + 1)^2", kq) == x * x + x * 2 + 1


@pytest.mark.parametrize(
    "text,fragment,col",
    [
        ("x theta", "juxtaposition", 3),
        ("x + y", "unknown identifier 'y'", 5),
        ("x^(1/2)", "fractional", 3),
        ("x^1.5", "fractional", 4),
        ("x/theta", "divisor", 3),
        ("(x", "expected ')'", 3),
        ("", "empty", 1),
        ("x $ 1", "unexpected character", 3),
    ],
)
def test_errors_with_position(kq, text, fragment, col):
    with pytest.raises(ParseError) as info:
        parse_element(text, kq)
    assert fragment in str(info.value)
    assert info.value.column == col


def test_multiline_position(kq):
    with pytest.raises(ParseError) as info:
        parse_element("x +\n  zz", kq)
    assert (info.value.line, info.value.column) == (2, 3)


def test_division_by_zero(kq):
    with pytest.raises(EvaluationError):
        parse_element("x/(q - q)", kq)


@pytest.mark.parametrize("name", ALGEBRA_NAMES)
def test_round_trip_random_elements(name):
    pres = build(name).pres
    rng = random.Random(7)
    for _ in range(30):
        e = pres.zero()
        for _ in range(3):
            e = e + pres.normalize_letters(pres.random_word(rng, 5)) * rng.randint(-3, 3) * Q ** rng.randint(-2, 2)
        again = parse_element(str(e), pres)
        assert again == e
        assert str(again) == str(e)


def test_dual_expressions():
    u = parse_dual("chi*phi + 2*Q^-2")
    assert str(u) == "2*Qinv*Qinv + chi*phi"
    assert parse_dual(str(u)) == u
    with pytest.raises(EvaluationError):
        parse_dual("phi^-1")
