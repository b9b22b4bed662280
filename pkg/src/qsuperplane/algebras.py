"""Catalog of the presentations used throughout the package.

Every algebra is built from scratch on each call of :func:`build` with a given
set of fault switches; unfaulted builds are cached.  Normal orders:

=============  ==========================  ============================
name           generators (normal order)   Hopf data
=============  ==========================  ============================
glq11          a, beta, gamma, d           matrix coproduct, S(M) = M^-1
kq11           x, theta                    Delta(x) = x(x)x + theta(x)theta
dual-plane     xi, y                       none (comodule only)
uqk11          Q, phi                      Delta(phi) = phi(x)Q^-1 + Q(x)phi
uqk11-orig     Q, phi0                     Delta(phi0) = phi0(x)Q^-2 + 1(x)phi0
kqf11-q2       gt, Dtheta                  Delta(Dtheta) = Dtheta(x)1 + gt^2(x)Dtheta
kqf11-q        g, Dtheta                   Delta(Dtheta) = Dtheta(x)1 + g(x)Dtheta
=============  ==========================  ============================

``Q`` stands for ``q^(chi/2)``, ``gt`` for ``q^(N/2)`` and ``g`` for ``q^N``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .hopf import HopfStructure, TensorElement
from .kernel import Element, GeneratorDecl, Morphism, Presentation
from .scalars import I, LAMBDA, ONE, P, Q, k_of_F

ALGEBRA_NAMES = ("glq11", "kq11", "dual-plane", "uqk11", "uqk11-orig", "kqf11-q", "kqf11-q2")
HOPF_ALGEBRAS = ("glq11", "kq11", "uqk11", "uqk11-orig", "kqf11-q", "kqf11-q2")

# fault switches understood by the constructors
ALGEBRA_FAULTS = {
    "kq11-theta-x": "drop q^-1 from the rule theta*x -> q^-1 x*theta",
    "glq11-da": "drop the lambda*beta*gamma term of d*a",
    "kq11-antipode": "flip the sign of S(theta)",
    "uqk11-phi-square": "drop the 1/lambda normalisation of phi^2",
    "uqk11-coproduct": "replace Delta(phi) by phi(x)Q + Q(x)phi",
}


class UnknownAlgebra(KeyError):
    pass


@dataclass(frozen=True)
class Algebra:
    name: str
    pres: Presentation
    hopf: HopfStructure | None

    def gen(self, name: str) -> Element:
        return self.pres.gen(name)


def _t(*elements: Element) -> TensorElement:
    return TensorElement.of(*elements)


# -- GL_q(1|1) ---------------------------------------------------------------


def _glq11(faults: frozenset) -> Algebra:
    q = Q
    da = [(1, {"a": 1, "d": 1})]
    if "glq11-da" not in faults:
        da.append((LAMBDA, {"beta": 1, "gamma": 1}))
    pres = Presentation(
        "glq11",
        [
            GeneratorDecl("a", 0, invertible=True, inverse_name="ainv"),
            GeneratorDecl("beta", 1, nilpotent_square=True),
            GeneratorDecl("gamma", 1, nilpotent_square=True),
            GeneratorDecl("d", 0, invertible=True, inverse_name="dinv"),
        ],
        {
            ("beta", "a"): [(1 / q, {"a": 1, "beta": 1})],
            ("gamma", "a"): [(1 / q, {"a": 1, "gamma": 1})],
            ("d", "beta"): [(q, {"beta": 1, "d": 1})],
            ("d", "gamma"): [(q, {"gamma": 1, "d": 1})],
            ("gamma", "beta"): [(-1, {"beta": 1, "gamma": 1})],
            ("d", "a"): da,
        },
    )
    a, b, c, d = (pres.gen(n) for n in ("a", "beta", "gamma", "d"))
    ai, di = pres.gen("ainv"), pres.gen("dinv")
    hopf = HopfStructure(
        pres,
        coproduct={
            "a": _t(a, a) + _t(b, c),
            "beta": _t(a, b) + _t(b, d),
            "gamma": _t(c, a) + _t(d, c),
            "d": _t(c, b) + _t(d, d),
        },
        counit={"a": 1, "beta": 0, "gamma": 0, "d": 1},
        antipode={
            "a": ai + ai * b * di * c * ai,
            "beta": -(ai * b * di),
            "gamma": -(di * c * ai),
            "d": di + di * c * ai * b * di,
        },
    )
    return Algebra("glq11", pres, hopf)


# -- quantum superplane and its dual ------------------------------------------


def kq11_presentation(faults: Iterable[str] = ()) -> Presentation:
    coef = 1 if "kq11-theta-x" in faults else 1 / Q
    return Presentation(
        "kq11",
        [
            GeneratorDecl("x", 0, invertible=True, inverse_name="xinv"),
            GeneratorDecl("theta", 1, nilpotent_square=True),
        ],
        {("theta", "x"): [(coef, {"x": 1, "theta": 1})]},
    )


def _kq11(faults: frozenset) -> Algebra:
    pres = kq11_presentation(faults)
    x, th, xi = pres.gen("x"), pres.gen("theta"), pres.gen("xinv")
    s_theta = -(xi * th * xi)
    if "kq11-antipode" in faults:
        s_theta = -s_theta
    hopf = HopfStructure(
        pres,
        coproduct={"x": _t(x, x) + _t(th, th), "theta": _t(th, x) + _t(x, th)},
        counit={"x": 1, "theta": 0},
        antipode={"x": xi, "theta": s_theta},
    )
    return Algebra("kq11", pres, hopf)


def _dual_plane(faults: frozenset) -> Algebra:
    pres = Presentation(
        "dual-plane",
        [GeneratorDecl("xi", 1, nilpotent_square=True), GeneratorDecl("y", 0)],
        {("y", "xi"): [(Q, {"xi": 1, "y": 1})]},
    )
    return Algebra("dual-plane", pres, None)


# -- dual algebras --------------------------------------------------------------


def _abelian_odd(name: str, group: str, odd: str, square) -> Presentation:
    """One group-like and one odd generator that commute; ``odd^2`` given by ``square``."""
    return Presentation(
        name,
        [
            GeneratorDecl(group, 0, invertible=True, inverse_name=group + "inv"),
            GeneratorDecl(odd, 1, nilpotent_square=True),
        ],
        {(odd, group): [(1, {group: 1, odd: 1})]},
        {odd: [(c, {group: e}) for e, c in square]},
    )


def _uqk11(faults: frozenset) -> Algebra:
    norm = ONE if "uqk11-phi-square" in faults else 1 / LAMBDA
    pres = _abelian_odd("uqk11", "Q", "phi", [(2, norm), (-2, -norm)])
    g, gi, phi = pres.gen("Q"), pres.gen("Qinv"), pres.gen("phi")
    right = g if "uqk11-coproduct" in faults else gi
    hopf = HopfStructure(
        pres,
        coproduct={"Q": _t(g, g), "phi": _t(phi, right) + _t(g, phi)},
        counit={"Q": 1, "phi": 0},
        antipode={"Q": gi, "phi": -phi},
    )
    return Algebra("uqk11", pres, hopf)


def _uqk11_orig(faults: frozenset) -> Algebra:
    c = -1 / (1 - Q**-2)
    pres = _abelian_odd("uqk11-orig", "Q", "phi0", [(0, c), (-4, -c)])
    g, gi, phi = pres.gen("Q"), pres.gen("Qinv"), pres.gen("phi0")
    hopf = HopfStructure(
        pres,
        coproduct={"Q": _t(g, g), "phi0": _t(phi, gi * gi) + _t(pres.one(), phi)},
        counit={"Q": 1, "phi0": 0},
        antipode={"Q": gi, "phi0": -(g * g * phi)},
    )
    return Algebra("uqk11-orig", pres, hopf)


def dx_polynomial(base_power: int, f_value) -> list[tuple[int, object]]:
    """``D_x = (1 - F^N)/(1 - F)`` with ``F^N = group^base_power``, as ``[(exp, coef)]``."""
    c = 1 / (1 - f_value)
    return [(0, c), (base_power, -c)]


def _poly_mul(a, b):
    out: dict[int, object] = {}
    for ea, ca in a:
        for eb, cb in b:
            out[ea + eb] = out.get(ea + eb, 0) + ca * cb
    return sorted(out.items())


def tx_polynomial(base_power: int, f_value) -> list[tuple[int, object]]:
    """``T_x = k D_x^2 + (1 - k) D_x`` as a Laurent polynomial in the group-like."""
    k = k_of_F(f_value)
    dx = dx_polynomial(base_power, f_value)
    out: dict[int, object] = {}
    for e, c in _poly_mul(dx, dx):
        out[e] = out.get(e, 0) + k * c
    for e, c in dx:
        out[e] = out.get(e, 0) + (1 - k) * c
    return [(e, c) for e, c in sorted(out.items()) if not (hasattr(c, "is_zero") and c.is_zero)]


def _kqf11_q2(faults: frozenset) -> Algebra:
    # k = 0 at F = q^2, so Dtheta^2 = D_x with F^N = gt^4
    pres = _abelian_odd("kqf11-q2", "gt", "Dtheta", tx_polynomial(4, Q * Q))
    g, gi, dt = pres.gen("gt"), pres.gen("gtinv"), pres.gen("Dtheta")
    hopf = HopfStructure(
        pres,
        coproduct={"gt": _t(g, g), "Dtheta": _t(dt, pres.one()) + _t(g * g, dt)},
        counit={"gt": 1, "Dtheta": 0},
        antipode={"gt": gi, "Dtheta": -(gi * gi * dt)},
    )
    return Algebra("kqf11-q2", pres, hopf)


def _kqf11_q(faults: frozenset) -> Algebra:
    # F = q, so F^N = q^N = g
    pres = _abelian_odd("kqf11-q", "g", "Dtheta", tx_polynomial(1, Q))
    g, gi, dt = pres.gen("g"), pres.gen("ginv"), pres.gen("Dtheta")
    hopf = HopfStructure(
        pres,
        coproduct={"g": _t(g, g), "Dtheta": _t(dt, pres.one()) + _t(g, dt)},
        counit={"g": 1, "Dtheta": 0},
        antipode={"g": gi, "Dtheta": -(gi * dt)},
    )
    return Algebra("kqf11-q", pres, hopf)


_BUILDERS = {
    "glq11": _glq11,
    "kq11": _kq11,
    "dual-plane": _dual_plane,
    "uqk11": _uqk11,
    "uqk11-orig": _uqk11_orig,
    "kqf11-q": _kqf11_q,
    "kqf11-q2": _kqf11_q2,
}


@lru_cache(maxsize=None)
def _build_cached(name: str, faults: frozenset) -> Algebra:
    return _BUILDERS[name](faults)


def build(name: str, faults: Iterable[str] = ()) -> Algebra:
    if name not in _BUILDERS:
        raise UnknownAlgebra(f"unknown algebra {name!r}; choose from {', '.join(ALGEBRA_NAMES)}")
    return _build_cached(name, frozenset(faults))


# -- maps between catalog algebras ---------------------------------------------


def redefinition_map(faults: Iterable[str] = ()) -> Morphism:
    """``Q -> Q``, ``phi -> i p^-1 Q phi0`` from uqk11 to uqk11-orig."""
    src, tgt = build("uqk11", faults).pres, build("uqk11-orig", faults).pres
    return Morphism(src, tgt, {"Q": tgt.gen("Q"), "phi": tgt.gen("Q") * tgt.gen("phi0") * (I / P)})


def isomorphism_map(faults: Iterable[str] = ()) -> Morphism:
    """``Q -> gt``, ``phi -> p gt^-1 Dtheta`` from uqk11 to kqf11-q2."""
    src, tgt = build("uqk11", faults).pres, build("kqf11-q2", faults).pres
    return Morphism(src, tgt, {"Q": tgt.gen("gt"), "phi": tgt.gen("gtinv") * tgt.gen("Dtheta") * P})


def isomorphism_inverse(faults: Iterable[str] = ()) -> Morphism:
    """``gt -> Q``, ``Dtheta -> p^-1 Q phi`` from kqf11-q2 to uqk11."""
    src, tgt = build("kqf11-q2", faults).pres, build("uqk11", faults).pres
    return Morphism(src, tgt, {"gt": tgt.gen("Q"), "Dtheta": tgt.gen("Q") * tgt.gen("phi") * P.inverse()})
