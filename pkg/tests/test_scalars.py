from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qsuperplane.scalars import (
    F,
    I,
    ONE,
    P,
    Q,
    ZERO,
    Scalar,
    SpecializationError,
    as_scalar,
    gaussian_sqrt,
    k_of_F,
    numerator_factors,
    qnum_geometric,
    qnum_symmetric,
    specialize,
)

small = st.integers(-3, 3)


@st.composite
def scalars(draw):
    """Random elements of Q(i)(p, F) built from small polynomial pieces."""
    def poly():
        terms = draw(st.lists(st.tuples(small, st.integers(0, 3), st.integers(0, 2), st.booleans()), max_size=3))
        out = ZERO
        for c, a, b, imag in terms:
            t = as_scalar(c) * P**a * F**b
            out = out + (t * I if imag else t)
        return out

    num = poly()
    den = poly()
    if den.is_zero:
        den = ONE
    return num / den


@settings(max_examples=60, deadline=None)
@given(scalars(), scalars(), scalars())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == ZERO
    if not a.is_zero:
        assert a * a.inverse() == ONE


@settings(max_examples=60, deadline=None)
@given(scalars())
def test_print_parse_round_trip(a):
    assert Scalar.parse(str(a)) == a
    assert str(Scalar.parse(str(a))) == str(a)


@given(st.integers(-8, 8), st.integers(-8, 8))
def test_qnum_additivity(m, n):
    assert qnum_geometric(m + n) == qnum_geometric(m) + Q**m * qnum_geometric(n)


def test_qnum_values():
    assert qnum_geometric(3) == 1 + Q + Q * Q
    assert qnum_geometric(-1) == -(Q.inverse())
    assert qnum_symmetric(2) == Q + Q.inverse()
    assert qnum_geometric(2, F) == 1 + F


def test_q_is_p_squared():
    assert Q == P * P
    assert str(Q) == "q" and str(P) == "p" and str(P**3) == "p^3"


def test_i_squared():
    assert I * I == -ONE
    assert str(ONE - I) == "1 - i"


def test_canonical_forms_are_reduced():
    a = (Q * Q - 1) / (Q - 1)
    assert a == Q + 1
    assert str(a) == "q + 1"
    assert str((1 + Q) / (1 - P)) == "(-p^2 - 1)/(p - 1)"


def test_k_of_F():
    assert k_of_F(Q * Q) == ZERO
    assert k_of_F(Q) == (Q - 1) / (Q + 1)


def test_specialize():
    s = (Q + F) / (P - 1)
    assert specialize(s, {"p": as_scalar(2), "F": as_scalar(3)}) == as_scalar(7)
    assert specialize(Q * Q + 1, {"q": as_scalar(-1)}) == as_scalar(2)
    with pytest.raises(SpecializationError):
        specialize(1 / (Q - 1), {"q": as_scalar(1)})


def test_gaussian_sqrt():
    assert gaussian_sqrt(as_scalar(4)) == as_scalar(2)
    assert gaussian_sqrt(as_scalar(-1)) ** 2 == -ONE
    assert gaussian_sqrt(2 * I) == 1 + I
    assert gaussian_sqrt(as_scalar(Fraction(9, 4))) == as_scalar(Fraction(3, 2))
    assert gaussian_sqrt(as_scalar(2)) is None
    assert gaussian_sqrt(Q) is None


def test_numerator_factors():
    s = (F - Q) * (F + Q) * (F - Q * Q) / (F + 1)
    assert sorted(str(f) for f, _ in numerator_factors(s)) == ["q + F", "q - F", "q^2 - F"]
