"""Exact coefficient field Q(i)(p, F) with q = p**2.

A :class:`Scalar` is stored as ``re + i*im`` where ``re`` and ``im`` are
reduced rational functions in ``p`` and ``F`` over the rationals.  Because
``i`` is algebraic of degree two over Q(p, F), the pair representation is a
canonical form: two scalars are equal iff their four polynomials agree.
"""

from __future__ import annotations

import numbers
import operator
from fractions import Fraction
from typing import Mapping, Union

import flint

__all__ = [
    "Scalar",
    "SpecializationError",
    "ONE",
    "ZERO",
    "I",
    "P",
    "Q",
    "F",
    "LAMBDA",
    "as_scalar",
    "qnum_geometric",
    "qnum_symmetric",
    "k_of_F",
    "specialize",
    "gaussian_sqrt",
    "format_scalar",
    "is_compound",
    "numerator_factors",
]

# lex with p > F: fixed for deterministic printing.
_CTX = flint.fmpq_mpoly_ctx.get(("p", "F"), "lex")
_PGEN, _FGEN = _CTX.gens()
_P0 = _CTX.from_dict({})
_P1 = _CTX.from_dict({(0, 0): 1})


class SpecializationError(ArithmeticError):
    """A binding sends a denominator to zero, or needs an unavailable root."""


def _canon(num, den):
    if num.is_zero():
        return _P0, _P1
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if not den.is_one():
        g = num.gcd(den)
        if not g.is_one():
            num = num / g
            den = den / g
        lc = den.leading_coefficient()
        if lc != 1:
            num = num / lc
            den = den / lc
    return num, den


def _fadd(an, ad, bn, bd):
    if ad.is_one() and bd.is_one():
        return an + bn, _P1
    if ad == bd:
        return _canon(an + bn, ad)
    return _canon(an * bd + bn * ad, ad * bd)


def _fmul(an, ad, bn, bd):
    if an.is_zero() or bn.is_zero():
        return _P0, _P1
    if ad.is_one() and bd.is_one():
        return an * bn, _P1
    # cross-cancel keeps operands small; inputs are already reduced
    g1 = an.gcd(bd)
    g2 = bn.gcd(ad)
    if not g1.is_one():
        an = an / g1
        bd = bd / g1
    if not g2.is_one():
        bn = bn / g2
        ad = ad / g2
    num, den = an * bn, ad * bd
    lc = den.leading_coefficient()
    if lc != 1:
        num, den = num / lc, den / lc
    return num, den


ScalarLike = Union["Scalar", int, Fraction]


class Scalar:
    """Immutable element of Q(i)(p, F)."""

    __slots__ = ("_rn", "_rd", "_in", "_id", "_hash")

    def __init__(self, rn=None, rd=None, in_=None, id_=None, *, _canonical=False):
        rn = _P0 if rn is None else rn
        rd = _P1 if rd is None else rd
        in_ = _P0 if in_ is None else in_
        id_ = _P1 if id_ is None else id_
        if not _canonical:
            rn, rd = _canon(rn, rd)
            in_, id_ = _canon(in_, id_)
        self._rn, self._rd, self._in, self._id = rn, rd, in_, id_
        self._hash = None

    # -- construction -----------------------------------------------------
    @classmethod
    def from_rational(cls, value: ScalarLike) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        fr = Fraction(value)
        poly = _CTX.from_dict({(0, 0): flint.fmpq(fr.numerator, fr.denominator)}) if fr else _P0
        return cls(poly, _P1, _canonical=True)

    @classmethod
    def gaussian(cls, re: ScalarLike, im: ScalarLike) -> "Scalar":
        return as_scalar(re) + I * as_scalar(im)

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        """Parse the scalar text syntax (integers, ``a/b``, ``q p F i``, ``+ - * / ^``)."""
        from .parsing import parse_scalar

        return parse_scalar(text)

    # -- inspection -------------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return self._rn.is_zero() and self._in.is_zero()

    @property
    def is_one(self) -> bool:
        return self._rn.is_one() and self._rd.is_one() and self._in.is_zero()

    @property
    def is_real(self) -> bool:
        """True when there is no ``i`` component."""
        return self._in.is_zero()

    def real_part(self) -> "Scalar":
        return Scalar(self._rn, self._rd, _canonical=True)

    def imag_part(self) -> "Scalar":
        return Scalar(self._in, self._id, _canonical=True)

    def is_rational_constant(self) -> bool:
        return self.is_real and self._rn.is_constant() and self._rd.is_one()

    def to_fraction(self) -> Fraction:
        if not self.is_rational_constant():
            raise ValueError(f"{self} is not a rational constant")
        c = self._rn.coefficient(0) if not self._rn.is_zero() else flint.fmpq(0)
        c = flint.fmpq(c)
        return Fraction(int(c.p), int(c.q))

    def p_parity_even(self) -> bool:
        """True when only even powers of ``p`` occur, i.e. the value lies in Q(i)(q, F)."""
        return all(m[0] % 2 == 0 for poly in self._polys() for m in poly.monoms())

    def _polys(self):
        return (self._rn, self._rd, self._in, self._id)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        rn, rd = _fadd(self._rn, self._rd, o._rn, o._rd)
        if self._in.is_zero() and o._in.is_zero():
            return Scalar(rn, rd, _canonical=True)
        in_, id_ = _fadd(self._in, self._id, o._in, o._id)
        return Scalar(rn, rd, in_, id_, _canonical=True)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self._rn, self._rd, -self._in, self._id, _canonical=True)

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self._in.is_zero() and o._in.is_zero():
            rn, rd = _fmul(self._rn, self._rd, o._rn, o._rd)
            return Scalar(rn, rd, _canonical=True)
        # (a + bi)(c + di) = (ac - bd) + (ad + bc) i
        ac = _fmul(self._rn, self._rd, o._rn, o._rd)
        bd = _fmul(self._in, self._id, o._in, o._id)
        ad = _fmul(self._rn, self._rd, o._in, o._id)
        bc = _fmul(self._in, self._id, o._rn, o._rd)
        rn, rd = _fadd(ac[0], ac[1], -bd[0], bd[1])
        in_, id_ = _fadd(ad[0], ad[1], bc[0], bc[1])
        return Scalar(rn, rd, in_, id_, _canonical=True)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero:
            raise ZeroDivisionError("division by zero scalar")
        if self._in.is_zero():
            num, den = self._rd, self._rn
            lc = den.leading_coefficient()
            if lc != 1:
                num, den = num / lc, den / lc
            return Scalar(num, den, _canonical=True)
        # 1/(a + bi) = (a - bi)/(a^2 + b^2)
        a2 = _fmul(self._rn, self._rd, self._rn, self._rd)
        b2 = _fmul(self._in, self._id, self._in, self._id)
        nn, nd = _fadd(a2[0], a2[1], b2[0], b2[1])
        norm_inv = Scalar(nd, nn)
        conj = Scalar(self._rn, self._rd, -self._in, self._id, _canonical=True)
        return conj * norm_inv

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> "Scalar":
        try:
            n = operator.index(n)
        except TypeError:
            raise TypeError("only integer powers of scalars are supported") from None
        if n < 0:
            return self.inverse() ** (-n)
        if self._in.is_zero():
            return Scalar(self._rn**n, self._rd**n, _canonical=True)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return (
            self._rn == o._rn and self._rd == o._rd and self._in == o._in and self._id == o._id
        )

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(str(x) for x in self._polys()))
        return self._hash

    def __bool__(self):
        return not self.is_zero

    # -- printing ---------------------------------------------------------
    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"Scalar({format_scalar(self)!r})"

    # -- substitution -----------------------------------------------------
    def specialize(self, bindings: Mapping[str, ScalarLike]) -> "Scalar":
        return specialize(self, bindings)


def _coerce(value) -> Scalar | None:
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (numbers.Rational, int)) and not isinstance(value, bool):
        return Scalar.from_rational(value)
    return None


def as_scalar(value) -> Scalar:
    s = _coerce(value)
    if s is None:
        raise TypeError(f"cannot interpret {value!r} as a Scalar")
    return s


ONE = Scalar(_P1, _P1, _canonical=True)
ZERO = Scalar(_canonical=True)
I = Scalar(_P0, _P1, _P1, _P1, _canonical=True)
P = Scalar(_PGEN, _P1, _canonical=True)
F = Scalar(_FGEN, _P1, _canonical=True)
Q = P * P
LAMBDA = Q - Q.inverse()


def qnum_geometric(n: int, base: Scalar = Q) -> Scalar:
    """``(1 - base**n) / (1 - base)``; Laurent for negative ``n``."""
    return (ONE - base**n) / (ONE - base)


def qnum_symmetric(n: int, base: Scalar = Q) -> Scalar:
    """``(base**n - base**-n) / (base - base**-1)``."""
    return (base**n - base ** (-n)) / (base - base.inverse())


def k_of_F(f: Scalar = F) -> Scalar:
    """The form-algebra constant ``(q**2 - F) / (F (F + 1))``."""
    return (Q * Q - f) / (f * (f + 1))


# -- specialization --------------------------------------------------------


def _eval_poly(poly, pval: Scalar | None, qval: Scalar | None, fval: Scalar | None, owner):
    total = ZERO
    for (a, b), c in zip(poly.monoms(), poly.coeffs()):
        a, b, c = int(a), int(b), flint.fmpq(c)
        term = Scalar.from_rational(Fraction(int(c.p), int(c.q)))
        if a:
            if pval is not None:
                term = term * pval**a
            elif qval is not None:
                if a % 2:
                    raise SpecializationError(
                        f"{owner} involves odd powers of p; binding q alone needs a square root"
                    )
                term = term * qval ** (a // 2)
            else:
                term = term * P**a
        if b:
            term = term * (fval**b if fval is not None else F**b)
        total = total + term
    return total


def specialize(s: Scalar, bindings: Mapping[str, ScalarLike]) -> Scalar:
    """Field homomorphism substituting values for ``p``/``q`` and ``F``.

    ``bindings`` may contain ``"p"``, ``"q"`` (used only when ``p`` is absent,
    and only for scalars free of odd ``p`` powers) and ``"F"``.  The values
    are themselves Scalars; ``F`` may be bound to an expression in ``p``.
    """
    unknown = set(bindings) - {"p", "q", "F"}
    if unknown:
        raise KeyError(f"unknown scalar symbols in bindings: {sorted(unknown)}")
    pval = as_scalar(bindings["p"]) if "p" in bindings else None
    qval = as_scalar(bindings["q"]) if "q" in bindings and pval is None else None
    fval = as_scalar(bindings["F"]) if "F" in bindings else None
    if pval is not None and "q" in bindings and pval * pval != as_scalar(bindings["q"]):
        raise SpecializationError("inconsistent bindings: p**2 != q")
    rn, rd, in_, id_ = s._polys()
    num = _eval_poly(rn, pval, qval, fval, s) * _eval_poly(id_, pval, qval, fval, s)
    num = num + I * _eval_poly(in_, pval, qval, fval, s) * _eval_poly(rd, pval, qval, fval, s)
    den = _eval_poly(rd, pval, qval, fval, s) * _eval_poly(id_, pval, qval, fval, s)
    if den.is_zero:
        raise SpecializationError(f"denominator of {s} vanishes under {dict(bindings)}")
    return num / den


def gaussian_sqrt(value: Scalar) -> Scalar | None:
    """Square root of a Gaussian-rational constant within Q(i), if one exists."""
    re, im = value.real_part(), value.imag_part()
    if not (re.is_rational_constant() and im.is_rational_constant()):
        return None
    a, b = re.to_fraction(), im.to_fraction()
    # (x + iy)^2 = a + ib  =>  x^2 = (a + |z|)/2, y^2 = (|z| - a)/2
    norm2 = a * a + b * b
    modulus = _frac_sqrt(norm2)
    if modulus is None:
        return None
    x2, y2 = (a + modulus) / 2, (modulus - a) / 2
    x, y = _frac_sqrt(x2), _frac_sqrt(y2)
    if x is None or y is None:
        return None
    if b < 0:
        y = -y
    root = Scalar.gaussian(x, y)
    return root if root * root == value else None


def _frac_sqrt(fr: Fraction) -> Fraction | None:
    from math import isqrt

    if fr < 0:
        return None
    n, d = fr.numerator, fr.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


# -- printing --------------------------------------------------------------


def _format_monomial(a: int, b: int, in_q: bool) -> list[str]:
    parts = []
    if a:
        if in_q:
            e = a // 2
            parts.append("q" if e == 1 else f"q^{e}")
        else:
            parts.append("p" if a == 1 else f"p^{a}")
    if b:
        parts.append("F" if b == 1 else f"F^{b}")
    return parts


def _format_poly(poly, in_q: bool) -> str:
    if poly.is_zero():
        return "0"
    out = []
    for (a, b), c in zip(poly.monoms(), poly.coeffs()):
        c = Fraction(int(flint.fmpq(c).p), int(flint.fmpq(c).q))
        neg = c < 0
        c = abs(c)
        mono = _format_monomial(a, b, in_q)
        if mono:
            body = "*".join(([str(c)] if c != 1 else []) + mono)
        else:
            body = str(c)
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def _is_single_factor(poly) -> bool:
    """Printable without parentheses as a divisor or factor."""
    if len(poly.monoms()) != 1:
        return False
    (a, b), c = poly.monoms()[0], poly.coeffs()[0]
    nvars = (a > 0) + (b > 0)
    return (nvars == 0 and flint.fmpq(c).q == 1 and c > 0) or (nvars == 1 and c == 1)


def _is_multi_term(poly) -> bool:
    return len(poly.monoms()) > 1


def _format_frac(num, den, in_q: bool) -> str:
    ns = _format_poly(num, in_q)
    if den.is_one():
        return ns
    ds = _format_poly(den, in_q)
    if _is_multi_term(num):
        ns = f"({ns})"
    if not _is_single_factor(den):
        ds = f"({ds})"
    return f"{ns}/{ds}"


def is_compound(s: Scalar) -> bool:
    """Whether the printed scalar needs parentheses when used as a factor."""
    return not (s.is_real and not _is_multi_term(s._rn) and s._rd.is_one())


def format_scalar(s: Scalar) -> str:
    in_q = s.p_parity_even()
    re_s = _format_frac(s._rn, s._rd, in_q) if not s._rn.is_zero() else ""
    if s._in.is_zero():
        return re_s or "0"
    if s._in.is_one() and s._id.is_one():
        im_s = "i"
    elif (-s._in).is_one() and s._id.is_one():
        im_s = "-i"
    else:
        body = _format_frac(s._in, s._id, in_q)
        if _is_multi_term(s._in) or not s._id.is_one():
            im_s = f"i*({body})"
        elif body.startswith("-"):
            im_s = f"-i*{body[1:]}"
        else:
            im_s = f"i*{body}"
    if not re_s:
        return im_s
    if im_s.startswith("-"):
        return f"{re_s} - {im_s[1:]}"
    return f"{re_s} + {im_s}"


def numerator_factors(s: Scalar) -> list[tuple[Scalar, int]]:
    """Irreducible factors over Q of the numerator of a real Scalar, with multiplicities."""
    if not s.is_real:
        raise ValueError("numerator_factors needs a real Scalar")
    if s.is_zero:
        return []
    _, factors = s._rn.factor()
    return sorted(
        ((Scalar(f, _P1, _canonical=True), int(e)) for f, e in factors),
        key=lambda fe: str(fe[0]),
    )
