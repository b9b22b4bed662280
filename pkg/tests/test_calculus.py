import pytest

from qsuperplane import calculus as ca
from qsuperplane.calculus import FormAlgebra
from qsuperplane.kernel import Element
from qsuperplane.scalars import F, ONE, Q, ZERO, k_of_F


@pytest.fixture(scope="module", params=["q2", "q"])
def fa(request):
    return FormAlgebra(ca.F_BINDINGS[request.param])


def test_form_relations(fa):
    w, v, x, th = fa.omega, fa.v, fa.x, fa.theta
    assert x * w == w * x * fa.F
    assert th * w == -(w * th * fa.F)
    assert x * v == v * x * Q
    assert w * w == v * v * fa.k
    assert th * th == fa.pres.zero()


def test_d_by_hand(fa):
    w, v, x, th = fa.omega, fa.v, fa.x, fa.theta
    assert fa.d(x) == w * x + v * th
    assert fa.d(th) == v * x + w * th
    assert fa.d(x * x) == w * x * x * (1 + fa.F) + v * x * th * (Q + 1 / Q)
    assert fa.d(x * th) == w * x * th * (1 + fa.F) + v * x * x * Q
    assert fa.d(w) == v * v * (fa.k - 1)
    assert fa.d(v).is_zero


def test_d_squared_window(fa):
    for mono in ca.form_window(2, 3):
        e = Element(fa.pres, {mono: ONE})
        assert fa.d(fa.d(e)).is_zero


def test_d_at_F_q_on_omega():
    fa = FormAlgebra(Q)
    assert fa.d(fa.omega) == fa.v * fa.v * (-2 / (Q + 1))


def test_forced_k():
    assert ca.k_forced(Q * Q) == ZERO == k_of_F(Q * Q)
    assert ca.k_forced(F) != k_of_F(F)
    for f in (Q, -Q):
        assert ca.k_forced(f) == k_of_F(f)


def test_operator_values(kq):
    x, th = kq.gen("x"), kq.gen("theta")
    dth = ca.dtheta_op(kq)
    assert dth(x) == th
    assert dth(th) == x
    assert dth(x**3) == x * x * th * (1 + Q**2 + Q**4) * Q**-2
    assert dth(x**-1) == -(x**-2 * th)
    assert ca.dx_op(F, kq)(x * x * th) == x * x * th * (1 + F + F * F)
    assert ca.number_op(kq)(x**-2 * th) == x**-2 * th * -1
    # symbolic F: T_x x^2 = [2]_F (1 + k F) x^2 = (1 + q^2) x^2
    assert ca.tx_op(F, kq)(x * x) == x * x * (1 + Q * Q)


def test_operator_identities():
    for rep in (
        ca.verify_operators(m_max=3),
        ca.verify_leibniz_coproduct(m_max=2),
        ca.verify_lie_relations("q", 3),
        ca.verify_lie_relations("q2", 3),
        ca.verify_Tx_susy(m_max=3),
    ):
        assert rep.passed, rep.render_text()


def test_F_constraint():
    rep = ca.solve_F_constraint()
    assert rep.passed
    assert [c.id for c in rep.discrepancies] == ["solutions are exactly F = q^2 and F = q as printed"]
    res = ca.ccod_residual(Q**3)
    assert not res.on_monomial((2, 0)).is_zero


def test_dga_with_controls():
    rep = ca.verify_dga_consistency(("q2",), b_max=2, m_max=2)
    assert rep.passed, rep.render_text()


@pytest.mark.parametrize("fault", ["forms-omega-square", "forms-parity-sign"])
def test_form_faults(fault):
    assert ca.verify_dga_consistency(("q2",), b_max=2, m_max=2, with_controls=False, faults=[fault]).failures


def test_kqF_and_isomorphism():
    assert ca.verify_kqF_hopf().passed
    assert ca.verify_isomorphism().passed
    assert ca.verify_redefinition().passed
    assert ca.verify_isomorphism(["uqk11-phi-square"]).failures
