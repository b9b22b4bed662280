import pytest

from qsuperplane import duality as du
from qsuperplane.duality import DualElement, Pairing
from qsuperplane.scalars import ONE, P, Q, ZERO, as_scalar


@pytest.fixture(scope="module")
def pr():
    return Pairing()


def test_generator_pairings(pr):
    assert pr.pair_word(("chi",), pr.monomial(3, 0)) == as_scalar(3)
    assert pr.pair_word(("phi",), pr.monomial(-2, 1)) == ONE
    assert pr.pair_word(("Q",), pr.monomial(3, 0)) == P**3
    assert pr.pair_word(("phi",), pr.monomial(2, 0)) == ZERO


def test_length_two_by_hand(pr):
    # Delta(x theta) = x^2 (x) x theta + x theta (x) x^2 and <chi, x^2> = 2
    assert pr.pair_word(("chi", "phi"), pr.monomial(1, 1)) == as_scalar(2)
    assert pr.pair_word(("phi", "chi"), pr.monomial(1, 1)) == as_scalar(2)
    # Delta(x) contains theta (x) theta; moving phi past theta costs a sign
    assert pr.pair_word(("phi", "phi"), pr.monomial(1, 0)) == -ONE
    assert pr.pair_word(("phi", "phi"), pr.monomial(-1, 0)) == Q * Q


@pytest.mark.parametrize("m", range(-5, 6))
def test_closed_forms(pr, m):
    for n in (0, 1):
        forms = du.closed_forms(m, n)
        for name, (_, corrected) in forms.items():
            assert pr.pair_word(tuple(name.split("*")), pr.monomial(m, n)) == corrected


def test_printed_chi_phi_row_is_the_odd_one(pr):
    printed, corrected = du.closed_forms(2, 0)["chi*phi"]
    assert printed != corrected
    assert pr.pair_word(("chi", "phi"), pr.monomial(2, 0)) == corrected == ZERO


def test_splittings_agree(pr):
    for w in du.words(du.DUAL_LETTERS, 3):
        if len(w) > 1:
            for m in (-2, 0, 3):
                for n in (0, 1):
                    assert pr.all_splittings_agree(w, pr.monomial(m, n))


def test_pair_linear(pr, kq):
    u = DualElement.word("chi") * 2 + DualElement.word("phi")
    e = kq.gen("x") ** 2 + kq.gen("theta") * Q
    assert pr.pair(u, e) == as_scalar(4) + Q


def test_dual_element_algebra():
    a = DualElement.word("chi")
    assert (a * 2 - a - a).is_zero
    assert str(a * DualElement.word("Qinv") + 1) == "1 + chi*Qinv"
    with pytest.raises(KeyError):
        DualElement.word("psi")


def test_basis_pairing_exponent():
    assert du.basis_pairing(1, 1, 2, 1) == P**3
    assert du.basis_pairing(1, 1, 2, 1, printed=True) == P**2
    assert du.basis_pairing(1, 0, 2, 1) == ZERO


def test_suites_pass():
    for rep in (
        du.verify_product_table(range(-3, 4)),
        du.verify_presentation_pairing(3, range(-3, 4)),
        du.verify_dual_hopf(range(-3, 4), range(-2, 3)),
        du.nondegeneracy_evidence(range(-3, 4)),
    ):
        assert rep.passed, rep.render_text()


def test_antipode_fault_detected():
    rep = du.verify_dual_hopf(range(-2, 3), range(-1, 2), ["kq11-antipode"])
    assert rep.failures
