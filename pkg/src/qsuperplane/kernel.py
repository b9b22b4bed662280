"""Finitely presented Z2-graded algebras and their PBW normal forms.

A :class:`Presentation` fixes an ordered list of generators.  Normal
monomials are ordered products ``g1^e1 ... gr^er``; words are rewritten into
that order by rules ``b a -> rhs`` (``b`` later than ``a``), nilpotent square
rules ``g g -> rhs`` and the implicit cancellations ``g g^-1 -> 1``.

Two normalizers are provided.  :meth:`Presentation.normalize` multiplies
letter by letter into an already normal monomial, memoized; it is the work
horse.  :meth:`Presentation.rewrite` applies rules literally to words with a
chosen strategy and is used to test strategy independence and confluence.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .report import Report
from .scalars import ONE, ZERO, Scalar, as_scalar, is_compound

Monomial = tuple[int, ...]
Letter = tuple[int, int]  # (generator index, +1 or -1)


class PresentationError(ValueError):
    pass


class NotInvertible(ArithmeticError):
    pass


class RewriteBudgetExceeded(RuntimeError):
    pass


class _CircularRule(Exception):
    def __init__(self, key):
        super().__init__(key)
        self.key = key


@dataclass(frozen=True)
class GeneratorDecl:
    name: str
    parity: int = 0
    invertible: bool = False
    nilpotent_square: bool = False
    inverse_name: str | None = None

    def __post_init__(self):
        if self.parity not in (0, 1):
            raise PresentationError(f"parity of {self.name} must be 0 or 1")
        if self.invertible and self.nilpotent_square:
            raise PresentationError(f"{self.name} cannot be both invertible and nilpotent")


RuleSpec = Sequence[tuple[object, Mapping[str, int]]]


class Presentation:
    """Ordered generators plus rewrite rules; immutable after construction."""

    def __init__(
        self,
        name: str,
        generators: Sequence[GeneratorDecl],
        swap_rules: Mapping[tuple[str, str], RuleSpec] | None = None,
        square_rules: Mapping[str, RuleSpec] | None = None,
        *,
        probe_length: int = 3,
    ):
        self.name = name
        self.generators = tuple(generators)
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise PresentationError("generator names must be unique")
        self.index = {g.name: i for i, g in enumerate(self.generators)}
        self.parities = tuple(g.parity for g in self.generators)
        self._odd = tuple(i for i, g in enumerate(self.generators) if g.parity)
        self._one = (0,) * len(self.generators)
        self._base_rules: dict[tuple[Letter, Letter], dict[Monomial, Scalar]] = {}
        self._rules: dict[tuple[Letter, Letter], dict[Monomial, Scalar]] = {}
        self._square: dict[int, dict[Monomial, Scalar]] = {}
        self._mono_letter_cache: dict[tuple[Monomial, Letter], dict[Monomial, Scalar]] = {}
        self._mul_cache: dict[tuple[Monomial, Monomial], dict[Monomial, Scalar]] = {}
        self._deriving: set[tuple[Letter, Letter]] = set()
        self._provisional: dict[tuple[Letter, Letter], dict[Monomial, Scalar]] = {}

        for (b, a), rhs in (swap_rules or {}).items():
            ib, ia = self._gen_index(b), self._gen_index(a)
            if ib <= ia:
                raise PresentationError(f"swap rule {b}*{a} is already in normal order")
            self._base_rules[((ib, 1), (ia, 1))] = self._rhs(rhs, f"{b}*{a}")
        for g, rhs in (square_rules or {}).items():
            ig = self._gen_index(g)
            if not self.generators[ig].nilpotent_square:
                raise PresentationError(f"square rule given for non-nilpotent generator {g}")
            self._square[ig] = self._rhs(rhs, f"{g}^2")
        for ig, g in enumerate(self.generators):
            if g.nilpotent_square and ig not in self._square:
                self._square[ig] = {}
        self._rules.update(self._base_rules)
        missing = [
            (self.generators[j].name, self.generators[i].name)
            for j in range(len(self.generators))
            for i in range(j)
            if ((j, 1), (i, 1)) not in self._base_rules
        ]
        if missing:
            raise PresentationError(f"missing swap rules for {missing}")
        # derive and store every inverse-letter rule once
        for lb, la in self.redex_pairs():
            self.rule(lb, la)
        self._verify_derived_rules()
        if probe_length:
            self._probe_termination(probe_length)

    # -- construction helpers ---------------------------------------------
    def _gen_index(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise PresentationError(f"unknown generator {name!r} in {self.name}") from None

    def _rhs(self, spec: RuleSpec, label: str) -> dict[Monomial, Scalar]:
        out: dict[Monomial, Scalar] = {}
        for coef, exps in spec:
            m = self.monomial(exps)
            c = out.get(m, ZERO) + as_scalar(coef)
            if c.is_zero:
                out.pop(m, None)
            else:
                out[m] = c
        return out

    def monomial(self, exps: Mapping[str, int] | Sequence[int]) -> Monomial:
        if isinstance(exps, Mapping):
            m = [0] * len(self.generators)
            for name, e in exps.items():
                m[self._gen_index(name)] = e
        else:
            m = list(exps)
        for i, e in enumerate(m):
            g = self.generators[i]
            if e < 0 and not g.invertible:
                raise PresentationError(f"negative exponent on non-invertible {g.name}")
            if g.nilpotent_square and e > 1:
                raise PresentationError(f"exponent of nilpotent {g.name} exceeds 1")
        return tuple(m)

    # -- letters ----------------------------------------------------------
    def letters(self, m: Monomial) -> tuple[Letter, ...]:
        out = []
        for i, e in enumerate(m):
            if e:
                s = 1 if e > 0 else -1
                out.extend([(i, s)] * abs(e))
        return tuple(out)

    def alphabet(self) -> list[Letter]:
        out = []
        for i, g in enumerate(self.generators):
            out.append((i, 1))
            if g.invertible:
                out.append((i, -1))
        return out

    def letter_name(self, letter: Letter) -> str:
        g = self.generators[letter[0]]
        if letter[1] > 0:
            return g.name
        return g.inverse_name or f"{g.name}^-1"

    def redex_pairs(self) -> list[tuple[Letter, Letter]]:
        """All letter pairs ``(left, right)`` with ``right`` strictly earlier in the order."""
        alpha = self.alphabet()
        return [(lb, la) for lb in alpha for la in alpha if lb[0] > la[0]]

    def is_redex(self, left: Letter, right: Letter) -> bool:
        if left[0] > right[0]:
            return True
        if left[0] == right[0]:
            if left[1] != right[1]:
                return True
            return self.generators[left[0]].nilpotent_square
        return False

    # -- monomials ---------------------------------------------------------
    @property
    def one_monomial(self) -> Monomial:
        return self._one

    def mono_parity(self, m: Monomial) -> int:
        return sum(m[i] for i in self._odd) % 2

    def inverse_monomial(self, m: Monomial) -> dict[Monomial, Scalar]:
        """The inverse of a monomial in invertible generators, as a normal form."""
        for i, e in enumerate(m):
            if e and not self.generators[i].invertible:
                raise NotInvertible(f"monomial involves non-invertible {self.generators[i].name}")
        result = {self._one: ONE}
        for letter in reversed(self.letters(m)):
            result = self._mul_dict_letter(result, (letter[0], -letter[1]))
        return result

    # -- rules ---------------------------------------------------------------
    def rule(self, left: Letter, right: Letter) -> dict[Monomial, Scalar]:
        """Right-hand side for the out-of-order pair ``left right``."""
        key = (left, right)
        r = self._rules.get(key)
        if r is not None:
            return r
        if key in self._provisional:
            return self._provisional[key]
        if left[0] <= right[0]:
            raise PresentationError("rule requested for pair in normal order")
        if key in self._deriving:
            raise _CircularRule(key)
        self._deriving.add(key)
        try:
            try:
                r = self._derive(key)
            except _CircularRule as exc:
                if exc.key != key:
                    raise
                r = self._derive_fixpoint(key)
        finally:
            self._deriving.discard(key)
        self._rules[key] = r
        return r

    def _derive(self, key):
        left, right = key
        if right[1] < 0:
            return self._derive_right_inverse(left, right[0])
        return self._derive_left_inverse(left[0], right)

    def _derive_fixpoint(self, key):
        # the correction term needs the rule itself; iterate from the leading
        # term, which converges because corrections are nilpotent
        left, right = key
        if right[1] < 0:
            c, _, _ = self._split_leading(self.rule(left, (right[0], 1)), (right[0], 1), left)
        else:
            c, _, _ = self._split_leading(self.rule((left[0], 1), right), right, (left[0], 1))
        m = [0] * len(self.generators)
        m[left[0]] += left[1]
        m[right[0]] += right[1]
        before = set(self._rules)
        current = {tuple(m): c.inverse()}
        for _ in range(32):
            self._provisional[key] = current
            self._clear_caches()
            nxt = self._derive(key)
            if nxt == current:
                break
            current = nxt
        else:
            raise PresentationError(f"rule {self._pair_label(key)} did not converge")
        del self._provisional[key]
        for k in set(self._rules) - before:
            del self._rules[k]
        self._clear_caches()
        return current

    def _clear_caches(self):
        self._mono_letter_cache.clear()
        self._mul_cache.clear()

    def _verify_derived_rules(self):
        for (left, right), rhs in self._rules.items():
            if (left, right) in self._base_rules:
                continue
            if right[1] < 0:
                back, want = self._mul_dict_letter(rhs, (right[0], 1)), left
            else:
                inv = {self._letter_mono((left[0], -left[1])): ONE}
                back, want = self._mul_dict_dict(inv, rhs), right
            if back != {self._letter_mono(want): ONE}:
                raise PresentationError(f"derived rule {self._pair_label((left, right))} is inconsistent")

    def _split_leading(self, rhs, first: Letter, second: Letter):
        m = [0] * len(self.generators)
        m[first[0]] += first[1]
        m[second[0]] += second[1]
        ab = tuple(m)
        c = rhs.get(ab)
        if c is None or c.is_zero:
            raise PresentationError("cannot derive inverse rule: swap rule has no leading term")
        rest = {k: v for k, v in rhs.items() if k != ab}
        return c, ab, rest

    def _derive_right_inverse(self, b: Letter, a: int) -> dict[Monomial, Scalar]:
        # b a = c a b + L   =>   b a^-1 = c^-1 a^-1 b - c^-1 a^-1 L a^-1
        if not self.generators[a].invertible:
            raise PresentationError("inverse letter of non-invertible generator")
        c, _, rest = self._split_leading(self.rule(b, (a, 1)), (a, 1), b)
        cinv = c.inverse()
        ainv = (a, -1)
        lead = self._mul_dict_letter({self._letter_mono(ainv): cinv}, b)
        tail = self._mul_dict_dict({self._letter_mono(ainv): -cinv}, rest)
        tail = self._mul_dict_letter(tail, ainv)
        return _dict_add(lead, tail)

    def _derive_left_inverse(self, b: int, a: Letter) -> dict[Monomial, Scalar]:
        # b a = c a b + L   =>   b^-1 a = c^-1 a b^-1 - c^-1 b^-1 L b^-1
        if not self.generators[b].invertible:
            raise PresentationError("inverse letter of non-invertible generator")
        c, _, rest = self._split_leading(self.rule((b, 1), a), a, (b, 1))
        cinv = c.inverse()
        binv = (b, -1)
        lead = self._mul_dict_letter({self._letter_mono(a): cinv}, binv)
        tail = self._mul_dict_dict({self._letter_mono(binv): -cinv}, rest)
        tail = self._mul_dict_letter(tail, binv)
        return _dict_add(lead, tail)

    def _letter_mono(self, letter: Letter) -> Monomial:
        m = [0] * len(self.generators)
        m[letter[0]] = letter[1]
        return tuple(m)

    def _pair_label(self, key) -> str:
        return f"{self.letter_name(key[0])}*{self.letter_name(key[1])}"

    # -- fast normalizer ------------------------------------------------------
    def _mono_letter(self, m: Monomial, letter: Letter) -> dict[Monomial, Scalar]:
        key = (m, letter)
        cached = self._mono_letter_cache.get(key)
        if cached is not None:
            return cached
        r, s = letter
        j = max((i for i, e in enumerate(m) if e), default=-1)
        if j < r or (j == r and not self.generators[r].nilpotent_square):
            out_m = list(m)
            out_m[r] += s
            result = {tuple(out_m): ONE}
        elif j == r:
            # nilpotent generator squared
            prefix = list(m)
            prefix[r] = 0
            result = self._mul_dict_dict({tuple(prefix): ONE}, self._square[r])
        else:
            prefix = list(m)
            last = (j, 1 if m[j] > 0 else -1)
            prefix[j] -= last[1]
            result = self._mul_dict_dict({tuple(prefix): ONE}, self.rule(last, letter))
        self._mono_letter_cache[key] = result
        return result

    def _mul_dict_letter(self, d: Mapping[Monomial, Scalar], letter: Letter) -> dict[Monomial, Scalar]:
        out: dict[Monomial, Scalar] = {}
        for m, c in d.items():
            for m2, c2 in self._mono_letter(m, letter).items():
                _acc(out, m2, c * c2)
        return out

    def mul_monomials(self, u: Monomial, v: Monomial) -> dict[Monomial, Scalar]:
        key = (u, v)
        cached = self._mul_cache.get(key)
        if cached is not None:
            return cached
        result: dict[Monomial, Scalar] = {u: ONE}
        for letter in self.letters(v):
            result = self._mul_dict_letter(result, letter)
        self._mul_cache[key] = result
        return result

    def _mul_dict_dict(self, a: Mapping[Monomial, Scalar], b: Mapping[Monomial, Scalar]):
        out: dict[Monomial, Scalar] = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                c12 = c1 * c2
                for m3, c3 in self.mul_monomials(m1, m2).items():
                    _acc(out, m3, c12 * c3)
        return out

    def normalize_letters(self, letters: Iterable[Letter]) -> "Element":
        d: dict[Monomial, Scalar] = {self._one: ONE}
        for letter in letters:
            d = self._mul_dict_letter(d, letter)
        return Element(self, d)

    def word_letters(self, word: Sequence[tuple[str, int]]) -> list[Letter]:
        """Expand ``[(name, exponent), ...]`` into letters; inverse names allowed."""
        letters: list[Letter] = []
        for name, e in word:
            idx, sign = self.resolve_name(name)
            e *= sign
            if e < 0 and not self.generators[idx].invertible:
                raise PresentationError(
                    f"negative exponent on non-invertible generator {self.generators[idx].name}"
                )
            letters.extend([(idx, 1 if e > 0 else -1)] * abs(e))
        return letters

    def resolve_name(self, name: str) -> tuple[int, int]:
        if name in self.index:
            return self.index[name], 1
        for i, g in enumerate(self.generators):
            if g.invertible and g.inverse_name == name:
                return i, -1
        raise PresentationError(f"unknown generator {name!r} in {self.name}")

    def normalize(self, word: Sequence[tuple[str, int]]) -> "Element":
        """Normal form of the word ``[(generator, exponent), ...]``; the empty word is 1."""
        return self.normalize_letters(self.word_letters(word))

    # -- literal string rewriting ------------------------------------------
    def _rhs_words(self, left: Letter, right: Letter) -> list[tuple[tuple[Letter, ...], Scalar]]:
        if left[0] == right[0]:
            if left[1] != right[1]:
                return [((), ONE)]
            rhs = self._square[left[0]]
        else:
            rhs = self.rule(left, right)
        return [(self.letters(m), c) for m, c in rhs.items()]

    def rewrite(
        self, letters: Sequence[Letter], strategy: str = "leftmost", budget: int | None = None
    ) -> tuple["Element", int]:
        """Rewrite a word by literal rule application; returns (normal form, steps)."""
        if strategy not in ("leftmost", "rightmost"):
            raise ValueError("strategy must be 'leftmost' or 'rightmost'")
        pending: dict[tuple[Letter, ...], Scalar] = {tuple(letters): ONE}
        done: dict[Monomial, Scalar] = {}
        steps = 0
        while pending:
            word, c = pending.popitem()
            pos = self._find_redex(word, strategy)
            if pos is None:
                _acc(done, self._word_to_monomial(word), c)
                continue
            steps += 1
            if budget is not None and steps > budget:
                raise RewriteBudgetExceeded(f"rewrite budget {budget} exceeded")
            for rhs_word, c2 in self._rhs_words(word[pos], word[pos + 1]):
                new = word[:pos] + rhs_word + word[pos + 2 :]
                _acc(pending, new, c * c2)
        return Element(self, done), steps

    def _find_redex(self, word, strategy) -> int | None:
        rng = range(len(word) - 1)
        if strategy == "rightmost":
            rng = reversed(rng)
        for i in rng:
            if self.is_redex(word[i], word[i + 1]):
                return i
        return None

    def _word_to_monomial(self, word) -> Monomial:
        m = [0] * len(self.generators)
        for i, s in word:
            m[i] += s
        return tuple(m)

    def one_step_reducts(self, letters: Sequence[Letter]) -> list[tuple[int, "Element"]]:
        out = []
        word = tuple(letters)
        for pos in range(len(word) - 1):
            if self.is_redex(word[pos], word[pos + 1]):
                acc = Element.zero(self)
                for rhs_word, c in self._rhs_words(word[pos], word[pos + 1]):
                    acc = acc + self.normalize_letters(word[:pos] + rhs_word + word[pos + 2 :]) * c
                out.append((pos, acc))
        return out

    def _probe_termination(self, max_len: int) -> None:
        alpha = self.alphabet()
        budget = 50 * max_len * max_len
        for n in range(2, max_len + 1):
            for word in itertools.product(alpha, repeat=n):
                self.rewrite(word, "leftmost", budget=budget)

    # -- relations -------------------------------------------------------
    def relations(self, include_derived: bool = False) -> list[tuple[str, tuple[Letter, ...], "Element"]]:
        """Defining relations as ``(label, lhs word, rhs Element)``."""
        out = []
        rules = self._rules if include_derived else self._base_rules
        for key, rhs in sorted(rules.items()):
            out.append((self._pair_label(key), key, Element(self, rhs)))
        for ig, rhs in sorted(self._square.items()):
            name = self.generators[ig].name
            out.append((f"{name}*{name}", ((ig, 1), (ig, 1)), Element(self, rhs)))
        for ig, g in enumerate(self.generators):
            if g.invertible:
                out.append((f"{g.name}*{self.letter_name((ig, -1))}", ((ig, 1), (ig, -1)), self.one()))
                out.append((f"{self.letter_name((ig, -1))}*{g.name}", ((ig, -1), (ig, 1)), self.one()))
        return out

    # -- elements ---------------------------------------------------------
    def one(self) -> "Element":
        return Element(self, {self._one: ONE})

    def zero(self) -> "Element":
        return Element(self, {})

    def gen(self, name: str) -> "Element":
        idx, sign = self.resolve_name(name)
        return Element(self, {self._letter_mono((idx, sign)): ONE})

    def element(self, terms: Iterable[tuple[object, Mapping[str, int] | Sequence[int]]]) -> "Element":
        d: dict[Monomial, Scalar] = {}
        for c, exps in terms:
            _acc(d, self.monomial(exps), as_scalar(c))
        return Element(self, d)

    def scalar(self, c) -> "Element":
        return Element(self, {self._one: as_scalar(c)}) if not as_scalar(c).is_zero else self.zero()

    def inverse(self, e: "Element") -> "Element":
        """Inverse of ``unit + nilpotent``, where the unit is a single invertible term."""
        units = [(m, c) for m, c in e.terms.items() if self._is_unit_monomial(m)]
        if len(units) != 1:
            raise NotInvertible(f"no unique invertible leading term in {e}")
        m0, c0 = units[0]
        t0_inv = Element(self, self.inverse_monomial(m0)) * c0.inverse()
        nil = e - Element(self, {m0: c0})
        result = series_inverse(t0_inv, nil, self.one())
        if not (e * result - self.one()).is_zero or not (result * e - self.one()).is_zero:
            raise NotInvertible(f"series inverse of {e} did not verify")
        return result

    def _is_unit_monomial(self, m: Monomial) -> bool:
        return all(e == 0 or self.generators[i].invertible for i, e in enumerate(m))

    def sample_monomials(self, bound: int = 3, total: int | None = None) -> list[Monomial]:
        """Monomials with |exponent| <= bound per generator (0/1 for nilpotent ones)."""
        ranges = []
        for g in self.generators:
            if g.nilpotent_square:
                ranges.append(range(0, 2))
            elif g.invertible:
                ranges.append(range(-bound, bound + 1))
            else:
                ranges.append(range(0, bound + 1))
        out = []
        for m in itertools.product(*ranges):
            if total is None or sum(abs(e) for e in m) <= total:
                out.append(tuple(m))
        return out

    def random_word(self, rng: random.Random, max_len: int = 8) -> list[Letter]:
        alpha = self.alphabet()
        return [rng.choice(alpha) for _ in range(rng.randint(0, max_len))]

    def __repr__(self):
        return f"Presentation({self.name!r})"

    def format_monomial(self, m: Monomial) -> str:
        parts = []
        for i, e in enumerate(m):
            if e:
                name = self.generators[i].name
                parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts) if parts else "1"


def series_inverse(t0_inv, nil, one):
    """``(t0 + nil)^-1 = sum_k (-t0^-1 nil)^k t0^-1`` for nilpotent ``nil``."""
    step = -(t0_inv * nil)
    power = one
    total = t0_inv
    for _ in range(64):
        power = power * step
        if power.is_zero:
            return total
        total = total + power * t0_inv
    raise NotInvertible("nilpotent part did not vanish within 64 powers")


def _acc(d: dict, key, c: Scalar) -> None:
    v = d.get(key)
    v = c if v is None else v + c
    if v.is_zero:
        d.pop(key, None)
    else:
        d[key] = v


def _dict_add(a, b):
    out = dict(a)
    for k, v in b.items():
        _acc(out, k, v)
    return out


class Element:
    """Finite Scalar-weighted sum of normal monomials of one presentation."""

    __slots__ = ("pres", "terms")

    def __init__(self, pres: Presentation, terms: Mapping[Monomial, Scalar] | None = None):
        self.pres = pres
        self.terms = {m: c for m, c in (terms or {}).items() if not c.is_zero}

    @classmethod
    def zero(cls, pres: Presentation) -> "Element":
        return cls(pres, {})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "Element") -> None:
        if other.pres is not self.pres:
            raise PresentationError(f"mixed presentations {self.pres.name} and {other.pres.name}")

    def _lift(self, other):
        if isinstance(other, Element):
            self._check(other)
            return other
        return self.pres.scalar(other)

    def __add__(self, other):
        other = self._lift(other)
        return Element(self.pres, _dict_add(self.terms, other.terms))

    __radd__ = __add__

    def __neg__(self):
        return Element(self.pres, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check(other)
            return Element(self.pres, self.pres._mul_dict_dict(self.terms, other.terms))
        c = as_scalar(other)
        return Element(self.pres, {m: v * c for m, v in self.terms.items()})

    def __rmul__(self, other):
        c = as_scalar(other)
        return Element(self.pres, {m: c * v for m, v in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            return self.pres.inverse(self) ** (-n)
        result = self.pres.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.pres is other.pres and self.terms == other.terms
        try:
            return self == self.pres.scalar(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.pres.name, frozenset(self.terms.items())))

    def parity(self) -> int | None:
        """Parity if homogeneous (0 for the zero element), else None."""
        ps = {self.pres.mono_parity(m) for m in self.terms}
        if len(ps) > 1:
            return None
        return ps.pop() if ps else 0

    def coefficient(self, exps) -> Scalar:
        return self.terms.get(self.pres.monomial(exps), ZERO)

    def map_coefficients(self, fn) -> "Element":
        return Element(self.pres, {m: fn(c) for m, c in self.terms.items()})

    def sorted_terms(self) -> list[tuple[Monomial, Scalar]]:
        return sorted(self.terms.items(), key=lambda mc: _mono_sort_key(mc[0]))

    def __iter__(self) -> Iterator[tuple[Monomial, Scalar]]:
        return iter(self.sorted_terms())

    def __str__(self):
        return format_linear(
            [(self.pres.format_monomial(m), c) for m, c in self.sorted_terms()]
        )

    def __repr__(self):
        return f"Element[{self.pres.name}]({self})"


def _mono_sort_key(m: Monomial):
    # earlier generators dominate; higher exponent first
    return tuple(-e for e in m)


def format_linear(terms: list[tuple[str, Scalar]]) -> str:
    """Print ``sum c * basis`` with the conventions shared by all linear objects."""
    if not terms:
        return "0"
    out = []
    for basis, c in terms:
        if basis == "1":
            body = str(c)
            if is_compound(c) and len(terms) > 1:
                body = f"({body})"
        elif c.is_one:
            body = basis
        elif (-c).is_one:
            body = "-" + basis
        elif is_compound(c):
            body = f"({c})*{basis}"
        else:
            body = f"{c}*{basis}"
        if out:
            if body.startswith("-"):
                out.append(" - " + body[1:])
            else:
                out.append(" + " + body)
        else:
            out.append(body)
    return "".join(out)


# -- morphisms ----------------------------------------------------------------


class Morphism:
    """Algebra map determined by images of the (non-inverse) generators."""

    def __init__(self, source: Presentation, target: Presentation, images: Mapping[str, Element]):
        self.source, self.target = source, target
        self.images: dict[Letter, Element] = {}
        for name, img in images.items():
            idx, sign = source.resolve_name(name)
            if sign < 0:
                raise PresentationError("give images of generators, not of inverses")
            img = img if isinstance(img, Element) else target.scalar(img)
            if img.pres is not target:
                raise PresentationError(f"image of {name} is not in {target.name}")
            self.images[(idx, 1)] = img
        missing = [g.name for i, g in enumerate(source.generators) if (i, 1) not in self.images]
        if missing:
            raise PresentationError(f"no image for generators {missing}")
        self._inverse_images: dict[int, Element] = {}

    def parity_mismatches(self) -> list[str]:
        bad = []
        for (idx, _), img in sorted(self.images.items()):
            p = img.parity()
            if img.is_zero:
                continue
            if p is None or p != self.source.generators[idx].parity:
                bad.append(self.source.generators[idx].name)
        return bad

    def letter_image(self, letter: Letter) -> Element:
        if letter[1] > 0:
            return self.images[letter]
        inv = self._inverse_images.get(letter[0])
        if inv is None:
            inv = self.target.inverse(self.images[(letter[0], 1)])
            self._inverse_images[letter[0]] = inv
        return inv

    def apply_letters(self, letters: Iterable[Letter]) -> Element:
        result = self.target.one()
        for letter in letters:
            result = result * self.letter_image(letter)
        return result

    def __call__(self, e: Element) -> Element:
        if e.pres is not self.source:
            raise PresentationError("element not in the morphism's source")
        total = self.target.zero()
        for m, c in e.terms.items():
            total = total + self.apply_letters(self.source.letters(m)) * c
        return total


def verify_morphism(source: Presentation, target: Presentation, images: Mapping[str, Element]) -> Report:
    """Check that every defining relation of ``source`` maps to zero."""
    phi = images if isinstance(images, Morphism) else Morphism(source, target, images)
    report = Report(f"morphism {source.name} -> {target.name}")
    bad = phi.parity_mismatches()
    if bad:
        report.add("parity", False, f"parity mismatch on {', '.join(bad)}")
        return report
    report.add("parity", True)
    for label, lhs, rhs in source.relations():
        try:
            residual = phi.apply_letters(lhs) - phi(rhs)
        except NotInvertible as exc:
            report.add(f"relation {label}", False, f"image not invertible: {exc}")
            continue
        report.expect_zero(f"relation {label}", residual)
    return report


def check_local_confluence(pres: Presentation, max_overlap_len: int = 3) -> Report:
    """Resolve every word up to the given length along all its one-step reducts."""
    report = Report(f"confluence {pres.name}")
    alpha = pres.alphabet()
    n_overlaps = 0
    for n in range(2, max(2, max_overlap_len) + 1):
        for word in itertools.product(alpha, repeat=n):
            reducts = pres.one_step_reducts(word)
            if len(reducts) < 2:
                continue
            n_overlaps += 1
            first_pos, first = reducts[0]
            for pos, other in reducts[1:]:
                diff = first - other
                if not diff.is_zero:
                    label = "*".join(pres.letter_name(l) for l in word)
                    report.add(f"overlap {label} @{first_pos}/{pos}", False, diff)
    report.add(f"overlaps resolved ({n_overlaps} words)", not report.failures)
    return report


def check_strategy_independence(pres: Presentation, n_words: int = 200, max_len: int = 8, seed: int = 0) -> Report:
    """Leftmost-first and rightmost-first literal rewriting agree with the fast normalizer."""
    rng = random.Random(seed)
    report = Report(f"strategy {pres.name}")
    bad = 0
    max_steps = 0
    for k in range(n_words):
        word = pres.random_word(rng, max_len)
        left, s1 = pres.rewrite(word, "leftmost")
        right, s2 = pres.rewrite(word, "rightmost")
        fast = pres.normalize_letters(word)
        max_steps = max(max_steps, s1, s2)
        if left != right or left != fast:
            bad += 1
            label = "*".join(pres.letter_name(l) for l in word) or "1"
            report.add(f"word {k}: {label}", False, f"leftmost {left}; rightmost {right}; fast {fast}")
    report.add(f"{n_words} random words agree", bad == 0, note=f"max steps {max_steps}")
    return report


def free_presentation(name: str, names: Sequence[str], parities: Sequence[int] | None = None) -> Presentation:
    """Presentation in which distinct generators commute (graded) and nothing else holds.

    Only used as a trivially confluent baseline; a genuinely free algebra has
    no PBW normal order compatible with this kernel.
    """
    parities = parities or [0] * len(names)
    gens = [GeneratorDecl(n, p) for n, p in zip(names, parities)]
    rules = {}
    for j in range(len(names)):
        for i in range(j):
            sign = -1 if parities[i] and parities[j] else 1
            rules[(names[j], names[i])] = [(sign, {names[i]: 1, names[j]: 1})]
    return Presentation(name, gens, rules)
