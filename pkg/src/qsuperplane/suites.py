"""Named verification suites and the fault-injection registry."""

from __future__ import annotations

from typing import Callable, Iterable

from . import calculus, duality, matrices
from .algebras import ALGEBRA_FAULTS, ALGEBRA_NAMES, HOPF_ALGEBRAS, build
from .calculus import FormAlgebra, F_BINDINGS
from .hopf import check_cocommutativity, verify_hopf_axioms
from .kernel import check_local_confluence, check_strategy_independence
from .report import Report
from .scalars import ONE, ZERO

FAULTS = {
    **ALGEBRA_FAULTS,
    "r-perturb": "replace the lambda entry of R by lambda + 1",
    "forms-omega-square": "impose omega^2 = v^2 instead of omega^2 = k v^2",
    "forms-parity-sign": "use the Grassmann parity alone in the Leibniz sign",
    "dtheta-sign": "use D_theta x = theta - q x D_theta",
}


class UnknownSuite(KeyError):
    pass


class UnknownFault(KeyError):
    pass


def check_faults(faults: Iterable[str]) -> frozenset:
    faults = frozenset(faults)
    unknown = sorted(faults - set(FAULTS))
    if unknown:
        raise UnknownFault(f"unknown fault {', '.join(unknown)}; choose from {', '.join(sorted(FAULTS))}")
    return faults


def _confluence(faults, degree, seed) -> Report:
    report = Report("confluence")
    for name in ALGEBRA_NAMES:
        pres = build(name, faults).pres
        report.extend(check_local_confluence(pres), prefix=f"{name}: ")
        report.extend(check_strategy_independence(pres, n_words=200, seed=seed), prefix=f"{name}: ")
    for fname in ("q2", "q"):
        report.extend(check_local_confluence(FormAlgebra(F_BINDINGS[fname]).pres), prefix=f"forms F={fname}: ")
    return report


def _rtt(faults, degree, seed) -> Report:
    report = Report("rtt")
    r = matrices.r_matrix("r-perturb" in faults)
    for label, m in (("glq11 M", matrices.generic_matrix(faults)), ("kq11 A", matrices.plane_matrix(faults))):
        report.extend(matrices.rtt_check(m, r), prefix=f"{label}: ")
    if not faults:
        control = matrices.rtt_check(matrices.plane_matrix(["kq11-theta-x"]))
        report.add(
            "control: corrupted theta*x rule makes RTT fail",
            not control.passed,
            "corrupted rule passed",
            note=f"{len(control.failures)} entries nonzero",
        )
        printed = matrices.rtt_check(matrices.generic_matrix(), printed=True)
        report.claim(
            "RTT holds with the M2 sign exponent p(i)(p(k) + p(l)) as printed",
            printed.passed,
            f"{len(printed.failures)} of 16 entries nonzero",
        )
    return report


def _ybe(faults, degree, seed) -> Report:
    report = Report("ybe")
    r = matrices.r_matrix("r-perturb" in faults)
    _, conv = matrices.ybe_check(r)
    pinned = matrices.PINNED_YBE_CONVENTION
    report.add(f"R12 R13 R23 = R23 R13 R12 entrywise ({pinned} embedding, 8x8)", conv[pinned])
    report.add("unsigned embedding violates the equation (signs are required)", not conv["plain"])
    if "r-perturb" not in faults:
        _, perturbed = matrices.ybe_check(matrices.r_matrix(perturb=True))
        report.add("control: perturbed R fails the equation", not perturbed[pinned])
        _, ident = matrices.ybe_check(_identity_r())
        report.add("identity R satisfies the equation", ident[pinned])
    return report


def _identity_r():
    return [[ONE if a == b else ZERO for b in range(4)] for a in range(4)]


def _hopf(name: str) -> Callable[..., Report]:
    def run(faults, degree, seed) -> Report:
        report = Report(f"hopf:{name}")
        report.extend(verify_hopf_axioms(build(name, faults).hopf, sample_bound=degree or 3))
        return report

    return run


def _cocomm(faults, degree, seed) -> Report:
    bound = degree or 3
    report = Report("cocomm")
    kq = build("kq11", faults).hopf
    graded = check_cocommutativity(kq, bound, graded=True)
    report.claim(
        "kq11: Delta = tau Delta with the graded flip",
        all(graded.values()),
        "fails on " + ", ".join(k for k, v in sorted(graded.items()) if not v),
    )
    plain = check_cocommutativity(kq, bound, graded=False)
    report.add(
        "kq11: Delta = tau Delta with the unsigned flip",
        all(plain.values()),
        "fails on " + ", ".join(k for k, v in sorted(plain.items()) if not v),
    )
    uq = build("uqk11", faults).hopf
    for graded_flag, label in ((True, "graded"), (False, "unsigned")):
        res = check_cocommutativity(uq, bound, graded=graded_flag)
        report.add(f"uqk11: not cocommutative with the {label} flip", not all(res.values()), "cocommutative")
    return report


def _matrix(faults, degree, seed) -> Report:
    report = Report("matrix")
    report.extend(matrices.verify_matrix_layer(faults=faults))
    report.extend(matrices.verify_power_group_element(faults=faults), prefix="group element: ")
    report.extend(matrices.verify_copy_product(faults=faults), prefix="copy product: ")
    return report


def _coaction(faults, degree, seed) -> Report:
    report = Report("coaction")
    for target in ("kq11", "dual-plane"):
        report.extend(matrices.verify_coaction(target, faults), prefix=f"{target}: ")
    return report


def _duality(faults, degree, seed) -> Report:
    span = degree or 5
    window = range(-span, span + 1)
    report = Report("duality")
    report.extend(duality.verify_product_table(window, faults), prefix="products: ")
    report.extend(duality.verify_presentation_pairing(4, window, faults), prefix="presentation: ")
    report.extend(duality.verify_dual_hopf(window, window, faults), prefix="hopf: ")
    report.extend(duality.nondegeneracy_evidence(window), prefix="nondegeneracy: ")
    return report


def _calculus(faults, degree, seed) -> Report:
    m_max = degree or 4
    report = Report("calculus")
    report.extend(calculus.verify_dga_consistency(m_max=m_max, faults=faults), prefix="dga: ")
    report.extend(calculus.verify_operators(m_max=m_max, faults=faults), prefix="operators: ")
    report.extend(calculus.verify_leibniz_coproduct(m_max=min(m_max, 3), faults=faults), prefix="leibniz: ")
    return report


def _lie(faults, degree, seed) -> Report:
    m_max = degree or 4
    report = Report("lie")
    for fname in ("q", "q2"):
        report.extend(calculus.verify_lie_relations(fname, m_max, faults), prefix=f"F={fname}: ")
    report.extend(calculus.solve_F_constraint(faults=faults), prefix="constraint: ")
    report.extend(calculus.verify_Tx_susy(m_max=m_max, faults=faults), prefix="Tx: ")
    report.extend(calculus.verify_kqF_hopf(faults), prefix="kqF: ")
    return report


def _iso(faults, degree, seed) -> Report:
    report = Report("iso")
    report.extend(calculus.verify_isomorphism(faults))
    report.extend(calculus.verify_redefinition(faults))
    return report


SUITES: dict[str, Callable[..., Report]] = {
    "confluence": _confluence,
    "rtt": _rtt,
    "ybe": _ybe,
    **{f"hopf:{name}": _hopf(name) for name in HOPF_ALGEBRAS},
    "cocomm": _cocomm,
    "matrix": _matrix,
    "coaction": _coaction,
    "duality": _duality,
    "calculus": _calculus,
    "lie": _lie,
    "iso": _iso,
}

SUITE_NAMES = (*SUITES, "all")


def run_suite(name: str, faults: Iterable[str] = (), degree: int | None = None, seed: int = 0) -> list[Report]:
    """Reports for ``name``; ``all`` expands to every suite in a fixed order."""
    faults = check_faults(faults)
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    return [SUITES[n](faults, degree, seed) for n in names]
