"""Linear functionals on the superplane from generator pairings.

The dual side is the free algebra on the letters ``chi`` (even, primitive),
``phi`` (odd), ``Q`` and ``Qinv`` (even, group-like; ``Q`` pairs as
``q^(chi/2)``).  On the PBW basis ``x^m theta^n``::

    <chi, h> = m delta_{n,0}     <phi, h> = delta_{n,1}
    <Q^{+-1}, h> = p^{+-m} delta_{n,0}     <1, h> = delta_{n,0}

Longer words are evaluated with the graded rule
``<u v, a> = sum (-1)^{|v||a_(1)|} <u, a_(1)> <v, a_(2)>``.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Mapping, Sequence

from .algebras import build
from .kernel import Element, Monomial, _acc, format_linear
from .report import Report
from .scalars import ONE, P, Q, ZERO, Scalar, as_scalar

DUAL_LETTERS = ("chi", "phi", "Q", "Qinv")
LETTER_PARITY = {"chi": 0, "phi": 1, "Q": 0, "Qinv": 0}
Word = tuple[str, ...]


class DualElement:
    """Scalar-weighted sum of words in the dual letters."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, Scalar] | None = None):
        self.terms = {w: c for w, c in (terms or {}).items() if not c.is_zero}

    @classmethod
    def word(cls, *letters: str) -> "DualElement":
        for letter in letters:
            if letter not in LETTER_PARITY:
                raise KeyError(f"unknown dual letter {letter!r}")
        return cls({tuple(letters): ONE})

    @classmethod
    def scalar(cls, c) -> "DualElement":
        return cls({(): as_scalar(c)})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _lift(self, other):
        return other if isinstance(other, DualElement) else DualElement.scalar(other)

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in self._lift(other).terms.items():
            _acc(out, w, c)
        return DualElement(out)

    __radd__ = __add__

    def __neg__(self):
        return DualElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, DualElement):
            c = as_scalar(other)
            return DualElement({w: v * c for w, v in self.terms.items()})
        out: dict[Word, Scalar] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                _acc(out, w1 + w2, c1 * c2)
        return DualElement(out)

    def __rmul__(self, other):
        c = as_scalar(other)
        return DualElement({w: c * v for w, v in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers of dual elements are not defined")
        result = DualElement.scalar(1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        return isinstance(other, DualElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        items = sorted(self.terms.items(), key=lambda wc: (len(wc[0]), wc[0]))
        return format_linear([("*".join(w) if w else "1", c) for w, c in items])


def word_parity(word: Sequence[str]) -> int:
    return sum(LETTER_PARITY[l] for l in word) % 2


class Pairing:
    """Pairing of dual words with the superplane, cached per (word, monomial)."""

    def __init__(self, faults: Iterable[str] = ()):
        alg = build("kq11", faults)
        self.pres = alg.pres
        self.hopf = alg.hopf
        self._cache: dict[tuple[Word, Monomial], Scalar] = {}
        self._split_cache: dict[tuple[Word, Monomial, int], Scalar] = {}

    def monomial(self, m: int, n: int) -> Monomial:
        return self.pres.monomial((m, n))

    # -- generators ---------------------------------------------------------
    @staticmethod
    def pair_generator(letter: str, mono: Monomial) -> Scalar:
        m, n = mono
        if letter == "chi":
            return as_scalar(m) if n == 0 else ZERO
        if letter == "phi":
            return ONE if n == 1 else ZERO
        if letter == "Q":
            return P**m if n == 0 else ZERO
        if letter == "Qinv":
            return P ** (-m) if n == 0 else ZERO
        if letter == "1":
            return ONE if n == 0 else ZERO
        raise KeyError(f"unknown dual letter {letter!r}")

    # -- words against the iterated coproduct --------------------------------
    def pair_word(self, word: Word, mono: Monomial) -> Scalar:
        key = (word, mono)
        v = self._cache.get(key)
        if v is not None:
            return v
        r = len(word)
        if r == 0:
            v = self.pair_generator("1", mono)
        elif r == 1:
            v = self.pair_generator(word[0], mono)
        else:
            v = ZERO
            parities = [LETTER_PARITY[l] for l in word]
            for keyt, c in self.hopf.mono_iterated(mono, r - 1).terms.items():
                prod = c
                for letter, h in zip(word, keyt):
                    prod = prod * self.pair_generator(letter, h)
                    if prod.is_zero:
                        break
                if prod.is_zero:
                    continue
                sign = sum(parities[t] * keyt[s][1] for s in range(r) for t in range(s + 1, r))
                v = v - prod if sign % 2 else v + prod
        self._cache[key] = v
        return v

    def pair(self, u: DualElement, e: Element) -> Scalar:
        if e.pres is not self.pres:
            raise ValueError("the pairing is defined against kq11 elements")
        total = ZERO
        for w, cw in u.terms.items():
            for m, cm in e.terms.items():
                total = total + cw * cm * self.pair_word(w, m)
        return total

    # -- recursive splitting oracle -------------------------------------------
    def pair_split(self, word: Word, mono: Monomial, split: int | None = None) -> Scalar:
        """Split ``word = u v`` at ``split`` (default: middle), apply one coproduct, recurse."""
        r = len(word)
        if r <= 1:
            return self.pair_generator(word[0] if word else "1", mono)
        k = r // 2 if split is None else split
        if not 0 < k < r:
            raise ValueError("split position must be inside the word")
        key = (word, mono, k)
        v = self._split_cache.get(key)
        if v is not None:
            return v
        u, w = word[:k], word[k:]
        pw = word_parity(w)
        v = ZERO
        for (h1, h2), c in self.hopf.mono_coproduct(mono).terms.items():
            left = self.pair_split(u, h1)
            if left.is_zero:
                continue
            right = self.pair_split(w, h2)
            if right.is_zero:
                continue
            term = c * left * right
            v = v - term if pw and h1[1] else v + term
        self._split_cache[key] = v
        return v

    def all_splittings_agree(self, word: Word, mono: Monomial) -> bool:
        values = {self.pair_split(word, mono, k) for k in range(1, len(word))}
        values.add(self.pair_word(word, mono))
        return len(values) == 1


def window(m_range: Iterable[int]) -> list[tuple[int, int]]:
    return [(m, n) for m in m_range for n in (0, 1)]


def _delta(a: int, b: int):
    return ONE if a == b else ZERO


def closed_forms(m: int, n: int) -> dict[str, tuple[Scalar, Scalar]]:
    """``{name: (printed value, corrected value)}`` for the length-two words."""
    phi2 = -(1 - Q ** (-2 * m)) / (1 - Q**-2) * _delta(n, 0)
    return {
        "chi*phi": (as_scalar(m + 1) * _delta(n, 0), as_scalar(m + 1) * _delta(n, 1)),
        "phi*chi": (as_scalar(m + 1) * _delta(n, 1), as_scalar(m + 1) * _delta(n, 1)),
        "phi*phi": (phi2, phi2),
    }


def verify_product_table(m_range: Iterable[int] = range(-5, 6), faults: Iterable[str] = ()) -> Report:
    pr = Pairing(faults)
    report = Report("duality products")
    m_range = list(m_range)
    grid = window(m_range)
    for name in ("chi*phi", "phi*chi", "phi*phi"):
        word = tuple(name.split("*"))
        printed_bad, corrected_bad, oracle_bad = [], [], []
        for m, n in grid:
            mono = pr.monomial(m, n)
            value = pr.pair_word(word, mono)
            printed, corrected = closed_forms(m, n)[name]
            if value != printed:
                printed_bad.append(f"(m={m},n={n}) computed {value} printed {printed}")
            if value != corrected:
                corrected_bad.append(f"(m={m},n={n}) computed {value} expected {corrected}")
            if value != pr.pair_split(word, mono):
                oracle_bad.append(f"(m={m},n={n})")
        span = f"m in [{m_range[0]},{m_range[-1]}], n in {{0,1}}"
        report.add(f"<{name}, h> iterated coproduct = splitting oracle, {span}", not oracle_bad, "; ".join(oracle_bad[:4]))
        if name == "chi*phi":
            report.add(f"<chi*phi, h> = (m+1) delta_(n,1), {span}", not corrected_bad, "; ".join(corrected_bad[:4]))
            report.claim(
                f"<chi*phi, h> = (m+1) delta_(n,0) as printed, {span}",
                not printed_bad,
                "; ".join(printed_bad[:4]) + (f"; {len(printed_bad)} mismatches" if printed_bad else ""),
            )
        elif name == "phi*chi":
            report.add(f"<phi*chi, h> = (m+1) delta_(n,1), {span}", not printed_bad, "; ".join(printed_bad[:4]))
        else:
            report.add(
                f"<phi*phi, h> = -(1-q^(-2m))/(1-q^(-2)) delta_(n,0), {span}", not printed_bad, "; ".join(printed_bad[:4])
            )
    # relations among the functionals
    comm_bad, square_bad = [], []
    for m, n in grid:
        mono = pr.monomial(m, n)
        c = pr.pair_word(("chi", "phi"), mono) - pr.pair_word(("phi", "chi"), mono)
        if not c.is_zero:
            comm_bad.append(f"(m={m},n={n}): {c}")
        rhs = -(pr.pair_word((), mono) - pr.pair_word(("Qinv",) * 4, mono)) / (1 - Q**-2)
        s = pr.pair_word(("phi", "phi"), mono) - rhs
        if not s.is_zero:
            square_bad.append(f"(m={m},n={n}): {s}")
    report.add("chi*phi - phi*chi = 0 as functionals", not comm_bad, "; ".join(comm_bad[:4]))
    report.add("phi^2 = -(1 - Q^-4)/(1 - q^-2) as functionals", not square_bad, "; ".join(square_bad[:4]))
    report.expect_zero("<phi^2, x> = -1", pr.pair_word(("phi", "phi"), pr.monomial(1, 0)) + 1)
    report.expect_zero("<phi^2, x^-1> = q^2", pr.pair_word(("phi", "phi"), pr.monomial(-1, 0)) - Q * Q)
    return report


def words(letters: Sequence[str], max_len: int) -> list[Word]:
    out: list[Word] = []
    for n in range(max_len + 1):
        out.extend(itertools.product(letters, repeat=n))
    return out


def basis_pairing(a: int, b: int, m: int, n: int, printed: bool = False) -> Scalar:
    """``<Q^a phi^b, x^m theta^n> = p^(a(m+n)) delta_(n,b)``; ``printed=True`` drops the ``n``."""
    if n != b:
        return ZERO
    return P ** (a * m) if printed else P ** (a * (m + n))


def verify_presentation_pairing(
    max_word_len: int = 4, m_range: Iterable[int] = range(-5, 6), faults: Iterable[str] = ()
) -> Report:
    """Pairing by recursive splitting equals the pairing of the normal form in uqk11-orig."""
    pr = Pairing(faults)
    orig = build("uqk11-orig", faults).pres
    report = Report("duality presentation")
    grid = window(m_range)
    letter_map = {"Q": "Q", "Qinv": "Qinv", "phi": "phi0"}
    bad, printed_bad = [], []
    all_words = words(("Q", "Qinv", "phi"), max_word_len)
    for w in all_words:
        nf = orig.normalize([(letter_map[l], 1) for l in w]) if w else orig.one()
        for m, n in grid:
            mono = pr.monomial(m, n)
            direct = pr.pair_split(w, mono)
            via_nf = ZERO
            via_printed = ZERO
            for (a, b), c in nf.terms.items():
                via_nf = via_nf + c * basis_pairing(a, b, m, n)
                via_printed = via_printed + c * basis_pairing(a, b, m, n, printed=True)
            if direct != via_nf:
                bad.append(f"{'*'.join(w) or '1'} at (m={m},n={n}): {direct} vs {via_nf}")
            if direct != via_printed:
                printed_bad.append(f"{'*'.join(w) or '1'} at (m={m},n={n})")
    report.add(
        f"{len(all_words)} words up to length {max_word_len}: splitting = normal form in uqk11-orig",
        not bad,
        "; ".join(bad[:4]),
    )
    report.claim(
        "basis pairing <Q^a phi^b, x^m theta^n> = p^(a m) delta_(n,b) as stated",
        not printed_bad,
        f"{len(printed_bad)} mismatches, e.g. {'; '.join(printed_bad[:3])}; the exponent is a(m+n)",
    )
    # each defining relation vanishes as a functional
    rel_bad = []
    for label, lhs, rhs in orig.relations():
        for m, n in grid:
            mono = pr.monomial(m, n)
            inv = {v: k for k, v in letter_map.items()}
            word = tuple(inv[orig.letter_name(l)] for l in lhs)
            val = pr.pair_split(word, mono)
            for (a, b), c in rhs.terms.items():
                val = val - c * basis_pairing(a, b, m, n)
            if not val.is_zero:
                rel_bad.append(f"{label} at (m={m},n={n}): {val}")
    report.add("defining relations of uqk11-orig annihilate the window", not rel_bad, "; ".join(rel_bad[:4]))
    # the splitting position never matters
    split_bad = [
        (w, m, n)
        for w in words(DUAL_LETTERS, 3)
        if len(w) > 1
        for m, n in grid
        if not pr.all_splittings_agree(w, pr.monomial(m, n))
    ]
    report.add("all binary splittings agree for words of length <= 3", not split_bad, split_bad[:4])
    parity_bad = [
        (w, m, n)
        for w in words(DUAL_LETTERS, 3)
        for m, n in grid
        if word_parity(w) != n and not pr.pair_split(w, pr.monomial(m, n)).is_zero
    ]
    report.add("pairing vanishes between opposite parities", not parity_bad, parity_bad[:4])
    return report


# -- Hopf structure of the dual ---------------------------------------------------

# Delta(Z) as [(coef, left word, right word)]
DUAL_COPRODUCT = {
    "chi": [(ONE, ("chi",), ()), (ONE, (), ("chi",))],
    "phi": [(ONE, ("phi",), ("Qinv", "Qinv")), (ONE, (), ("phi",))],
    "Q": [(ONE, ("Q",), ("Q",))],
    "Qinv": [(ONE, ("Qinv",), ("Qinv",))],
}
DUAL_ANTIPODE = {
    "chi": DualElement.word("chi") * -1,
    "phi": DualElement.word("Q", "Q", "phi") * -1,
    "Q": DualElement.word("Qinv"),
    "Qinv": DualElement.word("Q"),
}
DUAL_COUNIT = {"chi": ZERO, "phi": ZERO, "Q": ONE, "Qinv": ONE}


def verify_dual_hopf(
    m_range: Iterable[int] = range(-5, 6), split_range: Iterable[int] = range(-5, 6), faults: Iterable[str] = ()
) -> Report:
    pr = Pairing(faults)
    kq = pr.pres
    report = Report("duality hopf")
    split_range = list(split_range)
    basis = window(split_range)
    for z, delta in DUAL_COPRODUCT.items():
        bad = []
        for (m1, n1), (m2, n2) in itertools.product(basis, repeat=2):
            h1, h2 = pr.monomial(m1, n1), pr.monomial(m2, n2)
            lhs = ZERO
            for mono, c in kq.mul_monomials(h1, h2).items():
                lhs = lhs + c * pr.pair_word((z,), mono)
            rhs = ZERO
            for c, w1, w2 in delta:
                term = c * pr.pair_word(w1, h1) * pr.pair_word(w2, h2)
                rhs = rhs - term if word_parity(w2) and n1 else rhs + term
            if lhs != rhs:
                bad.append(f"(x^{m1} theta^{n1}, x^{m2} theta^{n2}): {lhs - rhs}")
        report.add(
            f"<{z}, h1 h2> = <Delta({z}), h1 (x) h2> on {len(basis) ** 2} splittings", not bad, "; ".join(bad[:4])
        )
    for z, eps in DUAL_COUNIT.items():
        report.expect_zero(f"<{z}, 1> = eps({z})", pr.pair_word((z,), kq.one_monomial) - eps)
    for z, s_z in DUAL_ANTIPODE.items():
        bad = []
        for m, n in window(m_range):
            h = Element(kq, {pr.monomial(m, n): ONE})
            lhs = pr.pair(s_z, h)
            rhs = pr.pair(DualElement.word(z), pr.hopf.antipode(h))
            if lhs != rhs:
                bad.append(f"(m={m},n={n}): {lhs - rhs}")
        report.add(f"<S({z}), h> = <{z}, S(h)>", not bad, "; ".join(bad[:4]))
    return report


def nondegeneracy_evidence(m_range: Iterable[int] = range(-5, 6), max_word_len: int = 4) -> Report:
    """No nonzero element supported on the window is annihilated by all short words.

    Finite evidence only: the pairing matrix (words x basis) has full column rank.
    """
    pr = Pairing()
    cols = window(m_range)
    report = Report("duality nondegeneracy")
    echelon: list[tuple[int, list[Scalar]]] = []
    used = 0
    for w in words(DUAL_LETTERS, max_word_len):
        row = [pr.pair_split(w, pr.monomial(m, n)) for m, n in cols]
        used += 1
        for pivot, prow in echelon:
            if not row[pivot].is_zero:
                f = row[pivot] / prow[pivot]
                row = [a - f * b for a, b in zip(row, prow)]
        lead = next((i for i, a in enumerate(row) if not a.is_zero), None)
        if lead is not None:
            echelon.append((lead, row))
        if len(echelon) == len(cols):
            break
    report.add(
        f"pairing matrix has full column rank {len(cols)} on the window",
        len(echelon) == len(cols),
        f"rank {len(echelon)} of {len(cols)}",
        note=f"finite evidence; {used} words examined",
    )
    return report
