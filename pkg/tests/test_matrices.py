import pytest

from qsuperplane import matrices as mx
from qsuperplane.scalars import I, Q, ZERO, qnum_geometric, specialize


@pytest.fixture(scope="module")
def A():
    return mx.plane_matrix()


@pytest.mark.parametrize("n", range(-4, 7))
def test_power_off_diagonal_sum(A, n):
    # off-diagonal of A^n is sum_k x^k theta x^(n-1-k) = [n]_(1/q) x^(n-1) theta
    kq = A.pres
    x, th = kq.gen("x"), kq.gen("theta")
    off = x ** (n - 1) * th * qnum_geometric(n, Q.inverse())
    want = mx.SuperMatrix(kq, [[x**n, off], [off, x**n]])
    assert mx.power(A, n) == want
    assert mx.power_closed_form(kq, n) == want


def test_inverse_and_sdet(A):
    kq = A.pres
    xi, th = kq.gen("xinv"), kq.gen("theta")
    inv = mx.inverse(A)
    assert inv.rows[0][0] == xi
    assert inv.rows[0][1] == -(xi**2 * th) * Q
    assert mx.sdet(A) == kq.one()
    assert mx.sdet(mx.power(A, 3)) == kq.one()


def test_sdet_generic():
    M = mx.generic_matrix()
    g = M.pres
    D = mx.sdet(M)
    for name in ("a", "beta", "gamma", "d"):
        e = g.gen(name)
        assert D * e == e * D
    assert D == mx.sdet_alt(M)
    assert D != mx.sdet_alt(M, printed=True)
    assert mx.inverse(M) * M == mx.SuperMatrix.identity(g)


def test_rtt():
    assert mx.rtt_check(mx.generic_matrix()).passed
    assert mx.rtt_check(mx.plane_matrix()).passed
    assert not mx.rtt_check(mx.plane_matrix(["kq11-theta-x"])).passed
    assert not mx.rtt_check(mx.generic_matrix(), mx.r_matrix(perturb=True)).passed
    assert not mx.rtt_check(mx.generic_matrix(), printed=True).passed


def test_ybe():
    _, conv = mx.ybe_check()
    assert conv == {"plain": False, "koszul": True}
    _, pert = mx.ybe_check(mx.r_matrix(perturb=True))
    assert not pert["koszul"]


def test_roots_of_unity(A):
    kq = A.pres
    x = kq.gen("x")
    for n, root in ((2, -1), (4, I)):
        spec = mx.power(A, n).map(lambda e: e.map_coefficients(lambda c: specialize(c, {"q": root})))
        assert spec == mx.SuperMatrix(kq, [[x**n, kq.zero()], [kq.zero(), x**n]])


def test_layer_reports():
    for rep in (
        mx.verify_matrix_layer(),
        mx.verify_power_group_element(),
        mx.verify_copy_product(),
        mx.verify_coaction("kq11"),
        mx.verify_coaction("dual-plane"),
    ):
        assert rep.passed, rep.render_text()
    assert len(mx.verify_matrix_layer().discrepancies) == 1


def test_parity_enforced(A):
    kq = A.pres
    with pytest.raises(ValueError):
        mx.SuperMatrix(kq, [[kq.gen("theta"), kq.zero()], [kq.zero(), kq.one()]])
    assert ZERO.is_zero
