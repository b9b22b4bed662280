import pytest

from qsuperplane.algebras import HOPF_ALGEBRAS, build
from qsuperplane.hopf import (
    TensorElement,
    check_cocommutativity,
    koszul_reversal_sign,
    verify_hopf_axioms,
    verify_hopf_morphism,
)
from qsuperplane.algebras import redefinition_map
from qsuperplane.scalars import Q, ZERO


@pytest.fixture(scope="module")
def hk():
    return build("kq11").hopf


def t(*es):
    return TensorElement.of(*es)


def test_koszul_product_sign(kq):
    th, x = kq.gen("theta"), kq.gen("x")
    # (1 (x) theta)(theta (x) 1) = -theta (x) theta
    assert t(kq.one(), th) * t(th, kq.one()) == -t(th, th)
    assert t(th, kq.one()) * t(kq.one(), th) == t(th, th)
    assert t(x, th).flip() == t(th, x)
    assert t(th, th).flip() == -t(th, th)
    assert t(th, th).flip(graded=False) == t(th, th)


def test_reversal_sign():
    assert koszul_reversal_sign([1, 1]) == -1
    assert koszul_reversal_sign([1, 0, 1]) == -1
    assert koszul_reversal_sign([1, 1, 1]) == -1
    assert koszul_reversal_sign([1, 1, 1, 1]) == 1
    assert koszul_reversal_sign([0, 0]) == 1


def test_superplane_coproduct(kq, hk):
    x, th = kq.gen("x"), kq.gen("theta")
    assert hk.coproduct(x) == t(x, x) + t(th, th)
    assert hk.coproduct(th) == t(x, th) + t(th, x)
    # (x(x)x + th(x)th)^2 by hand
    assert hk.coproduct(x * x) == t(x * x, x * x) + t(x * th, x * th) * (1 + Q**-2)
    assert hk.coproduct(x * th) == t(x * x, x * th) + t(x * th, x * x)


def test_superplane_counit_antipode(kq, hk):
    x, th = kq.gen("x"), kq.gen("theta")
    assert hk.counit(x**3 + th) == 1
    assert hk.counit(th) == ZERO
    assert hk.antipode(x) == kq.gen("xinv")
    assert hk.antipode(th) == -(x**-2 * th) * Q
    # S is an anti-map: S(x theta) = S(theta) S(x)
    assert hk.antipode(x * th) == hk.antipode(th) * hk.antipode(x)


def test_iterated_coproduct(kq, hk):
    x, th = kq.gen("x"), kq.gen("theta")
    d2 = hk.iterated_coproduct(x, 2)
    assert d2.rank == 3
    assert d2 == hk.coproduct(x).apply_at(0, hk.mono_coproduct)
    assert d2 == hk.coproduct(x).apply_at(1, hk.mono_coproduct)


@pytest.mark.parametrize("name", HOPF_ALGEBRAS)
def test_hopf_axioms(name):
    assert verify_hopf_axioms(build(name).hopf).passed


@pytest.mark.parametrize(
    "fault,name", [("kq11-antipode", "kq11"), ("uqk11-coproduct", "uqk11"), ("glq11-da", "glq11")]
)
def test_faults_detected(fault, name):
    report = verify_hopf_axioms(build(name, [fault]).hopf)
    assert report.failures


def test_cocommutativity(hk):
    graded = check_cocommutativity(hk, graded=True)
    assert not graded["x"] and graded["theta"]
    assert all(check_cocommutativity(hk, graded=False).values())
    uq = build("uqk11").hopf
    assert not all(check_cocommutativity(uq, graded=True).values())
    assert not all(check_cocommutativity(uq, graded=False).values())


def test_uqk11_data():
    alg = build("uqk11")
    Qg, phi = alg.gen("Q"), alg.gen("phi")
    assert alg.hopf.coproduct(phi) == t(phi, Qg**-1) + t(Qg, phi)
    assert alg.hopf.antipode(phi) == -phi
    assert alg.hopf.counit(Qg) == 1


def test_redefinition_morphism():
    rep = verify_hopf_morphism(redefinition_map(), build("uqk11").hopf, build("uqk11-orig").hopf, "redef")
    assert rep.passed
