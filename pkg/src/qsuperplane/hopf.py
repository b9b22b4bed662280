"""Graded tensor products and Hopf superalgebra structure maps.

Tensor factors multiply with the Koszul rule
``(u1 (x) u2)(v1 (x) v2) = (-1)^{|u2||v1|} u1 v1 (x) u2 v2``; higher ranks
pick up one sign per pair of factors that pass each other.  The antipode is
extended as a graded anti-homomorphism, ``S(uv) = (-1)^{|u||v|} S(v) S(u)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

from .kernel import Element, Letter, Monomial, NotInvertible, Presentation, _acc, format_linear, series_inverse
from .report import Report
from .scalars import ONE, ZERO, Scalar, as_scalar

TensorKey = tuple[Monomial, ...]


class TensorElement:
    """Scalar-weighted sum of tuples of normal monomials, one per factor."""

    __slots__ = ("factors", "terms")

    def __init__(self, factors: Sequence[Presentation], terms: Mapping[TensorKey, Scalar] | None = None):
        self.factors = tuple(factors)
        self.terms = {k: c for k, c in (terms or {}).items() if not c.is_zero}

    # -- constructors -----------------------------------------------------
    @classmethod
    def of(cls, *elements: Element) -> "TensorElement":
        """Pure tensor ``e1 (x) e2 (x) ...``."""
        factors = [e.pres for e in elements]
        terms: dict[TensorKey, Scalar] = {}
        for combo in itertools.product(*(e.terms.items() for e in elements)):
            key = tuple(m for m, _ in combo)
            c = ONE
            for _, ci in combo:
                c = c * ci
            _acc(terms, key, c)
        return cls(factors, terms)

    @classmethod
    def one(cls, factors: Sequence[Presentation]) -> "TensorElement":
        return cls(factors, {tuple(p.one_monomial for p in factors): ONE})

    @classmethod
    def zero(cls, factors: Sequence[Presentation]) -> "TensorElement":
        return cls(factors, {})

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "TensorElement"):
        if len(other.factors) != len(self.factors) or any(a is not b for a, b in zip(self.factors, other.factors)):
            raise ValueError("tensor factors differ")

    def key_parities(self, key: TensorKey) -> tuple[int, ...]:
        return tuple(p.mono_parity(m) for p, m in zip(self.factors, key))

    def parity(self) -> int | None:
        ps = {sum(self.key_parities(k)) % 2 for k in self.terms}
        if len(ps) > 1:
            return None
        return ps.pop() if ps else 0

    # -- linear structure -------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, TensorElement):
            other = TensorElement.one(self.factors) * as_scalar(other)
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return TensorElement(self.factors, out)

    __radd__ = __add__

    def __neg__(self):
        return TensorElement(self.factors, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, TensorElement):
            other = TensorElement.one(self.factors) * as_scalar(other)
        return self + (-other)

    def __rmul__(self, other):
        c = as_scalar(other)
        return TensorElement(self.factors, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, TensorElement):
            c = as_scalar(other)
            return TensorElement(self.factors, {k: v * c for k, v in self.terms.items()})
        self._check(other)
        out: dict[TensorKey, Scalar] = {}
        for ku, cu in self.terms.items():
            pu = self.key_parities(ku)
            for kv, cv in other.terms.items():
                pv = other.key_parities(kv)
                sign = 0
                for s in range(len(pv)):
                    if pv[s]:
                        sign += sum(pu[s + 1 :])
                c = cu * cv
                if sign % 2:
                    c = -c
                _mul_factors(self.factors, ku, kv, c, out)
        return TensorElement(self.factors, out)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return len(self.factors) == len(other.factors) and all(
            a is b for a, b in zip(self.factors, other.factors)
        ) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- structural maps --------------------------------------------------
    def apply_at(self, pos: int, fn: Callable[[Monomial], "TensorElement"]) -> "TensorElement":
        """Replace factor ``pos`` by an even linear map into a tensor of any rank."""
        out: dict[TensorKey, Scalar] = {}
        new_factors = None
        for key, c in self.terms.items():
            img = fn(key[pos])
            if new_factors is None:
                new_factors = self.factors[:pos] + img.factors + self.factors[pos + 1 :]
            for ikey, ic in img.terms.items():
                _acc(out, key[:pos] + ikey + key[pos + 1 :], c * ic)
        if new_factors is None:
            probe = fn(self.factors[pos].one_monomial)
            new_factors = self.factors[:pos] + probe.factors + self.factors[pos + 1 :]
        return TensorElement(new_factors, out)

    def map_factor(self, pos: int, fn: Callable[[Monomial], Element]) -> "TensorElement":
        """Apply an even linear map on one factor."""
        return self.apply_at(pos, lambda m: _as_rank1(fn(m)))

    def contract(self, pos: int, fn: Callable[[Monomial], Scalar]) -> "TensorElement | Element":
        """Apply an even functional on one factor, dropping it."""
        out: dict[TensorKey, Scalar] = {}
        for key, c in self.terms.items():
            v = fn(key[pos])
            if not v.is_zero:
                _acc(out, key[:pos] + key[pos + 1 :], c * v)
        factors = self.factors[:pos] + self.factors[pos + 1 :]
        if len(factors) == 1:
            return Element(factors[0], {k[0]: c for k, c in out.items()})
        return TensorElement(factors, out)

    def flip(self, graded: bool = True) -> "TensorElement":
        """Graded flip ``u (x) v -> (-1)^{|u||v|} v (x) u`` on a rank-2 tensor.

        ``graded=False`` gives the plain swap without the sign.
        """
        if self.rank != 2:
            raise ValueError("flip needs rank 2")
        out = {}
        for (u, v), c in self.terms.items():
            odd = graded and self.factors[0].mono_parity(u) and self.factors[1].mono_parity(v)
            _acc(out, (v, u), -c if odd else c)
        return TensorElement((self.factors[1], self.factors[0]), out)

    def multiply(self) -> Element:
        """Multiplication map on a rank-2 tensor over one presentation."""
        if self.rank != 2 or self.factors[0] is not self.factors[1]:
            raise ValueError("multiply needs rank 2 over one presentation")
        pres = self.factors[0]
        out: dict[Monomial, Scalar] = {}
        for (u, v), c in self.terms.items():
            for m, c2 in pres.mul_monomials(u, v).items():
                _acc(out, m, c * c2)
        return Element(pres, out)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kc: tuple(tuple(-e for e in m) for m in kc[0]))

    def __str__(self):
        return format_linear(
            [
                (" (x) ".join(p.format_monomial(m) for p, m in zip(self.factors, k)), c)
                for k, c in self.sorted_terms()
            ]
        )

    def __repr__(self):
        return f"TensorElement({self})"

    def as_nested(self) -> list:
        """Structured form: ``[[coefficient, [factor, ...]], ...]``."""
        return [
            [str(c), [p.format_monomial(m) for p, m in zip(self.factors, k)]] for k, c in self.sorted_terms()
        ]


def _as_rank1(e: Element) -> TensorElement:
    return TensorElement((e.pres,), {(m,): c for m, c in e.terms.items()})


def _mul_factors(factors, ku, kv, c, out):
    parts = [factors[s].mul_monomials(ku[s], kv[s]).items() for s in range(len(factors))]
    for combo in itertools.product(*parts):
        coef = c
        for _, ci in combo:
            coef = coef * ci
        _acc(out, tuple(m for m, _ in combo), coef)


def tensor_inverse(t: TensorElement) -> TensorElement:
    """Inverse of ``unit + nilpotent`` in a tensor algebra."""
    units = [
        (k, c)
        for k, c in t.terms.items()
        if all(p._is_unit_monomial(m) for p, m in zip(t.factors, k))
    ]
    if len(units) != 1:
        raise NotInvertible(f"no unique invertible term in {t}")
    k0, c0 = units[0]
    inv0 = TensorElement.of(*(Element(p, p.inverse_monomial(m)) for p, m in zip(t.factors, k0))) * c0.inverse()
    nil = t - TensorElement(t.factors, {k0: c0})
    one = TensorElement.one(t.factors)
    result = series_inverse(inv0, nil, one)
    if t * result != one or result * t != one:
        raise NotInvertible(f"series inverse of {t} did not verify")
    return result


def koszul_reversal_sign(parities: Sequence[int]) -> int:
    """Sign of reversing a product of homogeneous factors."""
    odd = sum(parities)
    return -1 if (odd * (odd - 1) // 2) % 2 else 1


class HopfStructure:
    """Coproduct, counit and antipode on a presentation, given on generators.

    Images of inverse generators are derived: ``Delta(g^-1) = Delta(g)^-1``,
    ``eps(g^-1) = eps(g)^-1`` and ``S(g^-1) = S(g)^-1``.
    """

    def __init__(
        self,
        pres: Presentation,
        coproduct: Mapping[str, TensorElement],
        counit: Mapping[str, object],
        antipode: Mapping[str, Element],
    ):
        self.pres = pres
        self.gen_coproduct = dict(coproduct)
        self.gen_counit = {k: as_scalar(v) for k, v in counit.items()}
        self.gen_antipode = dict(antipode)
        self._delta: dict[Letter, TensorElement] = {}
        self._eps: dict[Letter, Scalar] = {}
        self._s: dict[Letter, Element] = {}
        for i, g in enumerate(pres.generators):
            try:
                self._delta[(i, 1)] = coproduct[g.name]
                self._eps[(i, 1)] = as_scalar(counit[g.name])
                self._s[(i, 1)] = antipode[g.name]
            except KeyError as exc:
                raise ValueError(f"Hopf data for {pres.name} misses generator {exc}") from None
        self._mono_delta: dict[Monomial, TensorElement] = {}
        self._mono_s: dict[Monomial, Element] = {}
        self._iter_cache: dict[tuple[Monomial, int], TensorElement] = {}

    @property
    def factors2(self):
        return (self.pres, self.pres)

    def replace(self, **changes) -> "HopfStructure":
        """Copy with some generator images replaced (``coproduct=``, ``counit=``, ``antipode=``)."""
        data = {
            "coproduct": dict(self.gen_coproduct),
            "counit": dict(self.gen_counit),
            "antipode": dict(self.gen_antipode),
        }
        for kind, update in changes.items():
            data[kind].update(update)
        return HopfStructure(self.pres, **data)

    # -- letters ---------------------------------------------------------
    def letter_coproduct(self, letter: Letter) -> TensorElement:
        t = self._delta.get(letter)
        if t is None:
            t = tensor_inverse(self._delta[(letter[0], 1)])
            self._delta[letter] = t
        return t

    def letter_counit(self, letter: Letter) -> Scalar:
        v = self._eps.get(letter)
        if v is None:
            v = self._eps[(letter[0], 1)].inverse()
            self._eps[letter] = v
        return v

    def letter_antipode(self, letter: Letter) -> Element:
        v = self._s.get(letter)
        if v is None:
            v = self.pres.inverse(self._s[(letter[0], 1)])
            self._s[letter] = v
        return v

    # -- words and monomials ----------------------------------------------
    def word_coproduct(self, letters: Iterable[Letter]) -> TensorElement:
        result = TensorElement.one(self.factors2)
        for letter in letters:
            result = result * self.letter_coproduct(letter)
        return result

    def word_counit(self, letters: Iterable[Letter]) -> Scalar:
        v = ONE
        for letter in letters:
            v = v * self.letter_counit(letter)
        return v

    def word_antipode(self, letters: Sequence[Letter]) -> Element:
        letters = list(letters)
        result = self.pres.one()
        for letter in reversed(letters):
            result = result * self.letter_antipode(letter)
        sign = koszul_reversal_sign([self.pres.generators[i].parity for i, _ in letters])
        return result if sign > 0 else -result

    def mono_coproduct(self, m: Monomial) -> TensorElement:
        t = self._mono_delta.get(m)
        if t is None:
            t = self.word_coproduct(self.pres.letters(m))
            self._mono_delta[m] = t
        return t

    def mono_antipode(self, m: Monomial) -> Element:
        s = self._mono_s.get(m)
        if s is None:
            s = self.word_antipode(self.pres.letters(m))
            self._mono_s[m] = s
        return s

    def mono_counit(self, m: Monomial) -> Scalar:
        return self.word_counit(self.pres.letters(m))

    # -- elements ---------------------------------------------------------
    def coproduct(self, e: Element) -> TensorElement:
        total = TensorElement.zero(self.factors2)
        for m, c in e.terms.items():
            total = total + self.mono_coproduct(m) * c
        return total

    def counit(self, e: Element) -> Scalar:
        total = ZERO
        for m, c in e.terms.items():
            total = total + c * self.mono_counit(m)
        return total

    def antipode(self, e: Element) -> Element:
        total = self.pres.zero()
        for m, c in e.terms.items():
            total = total + self.mono_antipode(m) * c
        return total

    def iterated_coproduct(self, e: Element, r: int) -> TensorElement:
        """``(Delta (x) id ...) ... Delta``, rank ``r + 1``."""
        if r < 1:
            raise ValueError("r must be at least 1")
        total = None
        for m, c in e.terms.items():
            t = self.mono_iterated(m, r) * c
            total = t if total is None else total + t
        if total is None:
            return TensorElement.zero((self.pres,) * (r + 1))
        return total

    def mono_iterated(self, m: Monomial, r: int) -> TensorElement:
        key = (m, r)
        t = self._iter_cache.get(key)
        if t is None:
            if r == 1:
                t = self.mono_coproduct(m)
            else:
                t = self.mono_iterated(m, r - 1).apply_at(0, self.mono_coproduct)
            self._iter_cache[key] = t
        return t

    def coproduct_at(self, t: TensorElement, pos: int) -> TensorElement:
        return t.apply_at(pos, self.mono_coproduct)


def verify_hopf_axioms(hopf: HopfStructure, sample_bound: int = 3, label: str | None = None) -> Report:
    """Exact check of well-definedness, coassociativity, counit and antipode axioms."""
    pres = hopf.pres
    report = Report(f"hopf {label or pres.name}")
    # well-definedness on every relation
    for rel, lhs, rhs in pres.relations():
        report.expect_zero(f"delta respects {rel}", hopf.word_coproduct(lhs) - hopf.coproduct(rhs))
        report.expect_zero(f"eps respects {rel}", hopf.word_counit(lhs) - hopf.counit(rhs))
        report.expect_zero(f"S respects {rel}", hopf.word_antipode(lhs) - hopf.antipode(rhs))
    # generator-level data
    for letter in pres.alphabet():
        name = pres.letter_name(letter)
        g = pres.generators[letter[0]]
        if g.parity:
            report.expect_zero(f"eps({name}) = 0", hopf.letter_counit(letter))
        s_img = hopf.letter_antipode(letter)
        report.add(f"S({name}) has parity {g.parity}", s_img.parity() == g.parity or s_img.is_zero, s_img)
        d_img = hopf.letter_coproduct(letter)
        report.add(f"delta({name}) has parity {g.parity}", d_img.parity() == g.parity, d_img)
    samples = pres.sample_monomials(sample_bound, total=sample_bound)
    fails = {k: [] for k in ("coassoc", "counit-l", "counit-r", "antipode-l", "antipode-r")}
    for m in samples:
        u = Element(pres, {m: ONE})
        d = hopf.mono_coproduct(m)
        if hopf.coproduct_at(d, 0) != hopf.coproduct_at(d, 1):
            fails["coassoc"].append(m)
        if d.contract(0, hopf.mono_counit) != u:
            fails["counit-l"].append(m)
        if d.contract(1, hopf.mono_counit) != u:
            fails["counit-r"].append(m)
        eps1 = pres.scalar(hopf.mono_counit(m))
        left = d.map_factor(0, hopf.mono_antipode).multiply()
        right = d.map_factor(1, hopf.mono_antipode).multiply()
        if left != eps1:
            fails["antipode-l"].append((m, left - eps1))
        if right != eps1:
            fails["antipode-r"].append((m, right - eps1))
    names = {
        "coassoc": "coassociativity (delta x id) delta = (id x delta) delta",
        "counit-l": "counit (eps x id) delta = id",
        "counit-r": "counit (id x eps) delta = id",
        "antipode-l": "antipode m (S x id) delta = eps",
        "antipode-r": "antipode m (id x S) delta = eps",
    }
    for key, bad in fails.items():
        residual = "; ".join(_describe_failure(pres, b) for b in bad[:4])
        report.add(f"{names[key]} on {len(samples)} monomials", not bad, residual)
    # standard consequences; verified, not assumed
    for letter in pres.alphabet():
        name = pres.letter_name(letter)
        u = Element(pres, {pres._letter_mono(letter): ONE})
        s_u = hopf.antipode(u)
        report.expect_zero(f"eps(S({name})) = eps({name})", hopf.counit(s_u) - hopf.counit(u))
        lhs = hopf.coproduct(s_u)
        rhs = hopf.coproduct(u).flip().map_factor(0, hopf.mono_antipode).map_factor(1, hopf.mono_antipode)
        report.expect_zero(f"delta(S({name})) = (S x S) tau delta({name})", lhs - rhs)
    return report


def _describe_failure(pres, item) -> str:
    if isinstance(item, tuple) and len(item) == 2 and isinstance(item[1], Element):
        return f"{pres.format_monomial(item[0])}: {item[1]}"
    return pres.format_monomial(item)


def check_cocommutativity(hopf: HopfStructure, sample_bound: int = 3, graded: bool = True) -> dict[str, bool]:
    """Compare delta with tau . delta on generators and sampled monomials.

    ``tau`` is the graded flip unless ``graded=False``.
    """
    pres = hopf.pres
    out: dict[str, bool] = {}
    for letter in pres.alphabet():
        d = hopf.letter_coproduct(letter)
        out[pres.letter_name(letter)] = d == d.flip(graded)
    out["sampled monomials"] = all(
        hopf.mono_coproduct(m) == hopf.mono_coproduct(m).flip(graded)
        for m in pres.sample_monomials(sample_bound, total=sample_bound)
    )
    return out


def cocommutativity_residual(hopf: HopfStructure, e: Element, graded: bool = True) -> TensorElement:
    d = hopf.coproduct(e)
    return d - d.flip(graded)


def verify_hopf_morphism(phi, source: HopfStructure, target: HopfStructure, label: str) -> Report:
    """Relations map to zero and Delta, eps, S are intertwined on every letter."""
    from .kernel import verify_morphism

    report = Report(label)
    report.extend(verify_morphism(phi.source, phi.target, phi))
    if not report.passed:
        return report
    for letter in phi.source.alphabet():
        name = phi.source.letter_name(letter)
        img = phi.letter_image(letter)
        u = Element(phi.source, {phi.source._letter_mono(letter): ONE})
        mapped = source.coproduct(u)
        mapped = mapped.map_factor(0, lambda m: phi(Element(phi.source, {m: ONE})))
        mapped = mapped.map_factor(1, lambda m: phi(Element(phi.source, {m: ONE})))
        report.expect_zero(f"delta intertwined on {name}", target.coproduct(img) - mapped)
        report.expect_zero(f"eps intertwined on {name}", target.counit(img) - source.counit(u))
        report.expect_zero(f"S intertwined on {name}", target.antipode(img) - phi(source.antipode(u)))
    return report
