"""Command-line front end.

Exit status: 0 on success, 1 when a verification suite fails (the report is
still printed), 2 on usage, parse or evaluation errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from . import calculus, matrices
from .algebras import ALGEBRA_NAMES, UnknownAlgebra, build
from .duality import Pairing
from .hopf import TensorElement
from .kernel import Element, NotInvertible, PresentationError
from .parsing import EvaluationError, ParseError, parse_dual, parse_element, parse_scalar
from .scalars import Scalar, SpecializationError, format_scalar, gaussian_sqrt, specialize
from .suites import FAULTS, SUITE_NAMES, UnknownFault, UnknownSuite, check_faults, run_suite

OPERATORS = ("N", "Dx", "Dtheta", "Tx")
F_CHOICES = ("q", "q2", "sym")
FORM_F_CHOICES = ("q2", "q", "-q")


class UsageError(Exception):
    pass


# -- argument parsing ------------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", choices=ALGEBRA_NAMES, default=None)
    common.add_argument("--set", dest="settings", action="append", default=[], metavar="q=VALUE")
    common.add_argument("--max-degree", type=int, default=None)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--inject-fault", dest="faults", action="append", default=[], metavar="ID")
    common.add_argument("--file", default=None, help="read the expression from a file")
    common.add_argument("--timing", action="store_true", help="include elapsed time in verify output")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="qsuperplane", description="Exact computations on the quantum superplane.")
    sub = parser.add_subparsers(dest="command", required=True)

    def expr_cmd(name, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("expr", nargs="?")
        return p

    expr_cmd("normalize", "normal form of an expression")
    expr_cmd("coproduct", "coproduct of an expression")
    expr_cmd("counit", "counit of an expression")
    expr_cmd("antipode", "antipode of an expression")
    sub.add_parser("sdet", parents=[common], help="superdeterminant of the defining matrix")
    sub.add_parser("inverse", parents=[common], help="inverse of the defining matrix")
    p = sub.add_parser("power", parents=[common], help="integer power of the defining matrix")
    p.add_argument("--n", type=int, required=True)
    p = sub.add_parser("pair", parents=[common], help="pairing of a dual word with a superplane element")
    p.add_argument("dual")
    p.add_argument("plane", nargs="?")
    p = expr_cmd("d", "exterior differential of a form")
    p.add_argument("--F", dest="f_value", choices=FORM_F_CHOICES, default="q2")
    p = expr_cmd("act", "apply N, Dx, Dtheta or Tx to a superplane element")
    p.add_argument("--op", choices=OPERATORS, required=True)
    p.add_argument("--F", dest="f_value", choices=F_CHOICES, default="q2")
    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", help=f"one of {', '.join(SUITE_NAMES)}")
    sub.add_parser("faults", parents=[common], help="list fault-injection hooks")
    return parser


# -- helpers -------------------------------------------------------------------------


def _expression(args) -> str:
    if args.file is not None:
        if getattr(args, "expr", None) is not None:
            raise UsageError("give either an expression or --file, not both")
        try:
            with open(args.file, encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    if getattr(args, "expr", None) is None:
        raise UsageError("an expression is required")
    return args.expr


def _bindings(settings: Sequence[str]) -> dict[str, Scalar] | None:
    if not settings:
        return None
    out: dict[str, Scalar] = {}
    for item in settings:
        name, sep, value = item.partition("=")
        if not sep or name.strip() != "q":
            raise UsageError(f"--set accepts only q=<value>, got {item!r}")
        q = parse_scalar(value)
        if not (q.real_part().is_rational_constant() and q.imag_part().is_rational_constant()):
            raise UsageError(f"--set q needs an exact rational or Gaussian rational, got {value!r}")
        root = gaussian_sqrt(q)
        if root is None:
            raise UsageError(
                f"q={value} has no square root in Q(i), so p = q^(1/2) would need a radical; omit --set to work symbolically"
            )
        out = {"p": root, "q": q}
    return out


def _spec_scalar(c: Scalar, bindings) -> Scalar:
    return c if bindings is None else specialize(c, bindings)


def _spec(obj, bindings):
    if bindings is None:
        return obj
    if isinstance(obj, Scalar):
        return _spec_scalar(obj, bindings)
    if isinstance(obj, Element):
        return obj.map_coefficients(lambda c: _spec_scalar(c, bindings))
    if isinstance(obj, TensorElement):
        return TensorElement(obj.factors, {k: _spec_scalar(c, bindings) for k, c in obj.terms.items()})
    if isinstance(obj, matrices.SuperMatrix):
        return obj.map(lambda e: _spec(e, bindings))
    raise TypeError(type(obj))


def _render(obj) -> str:
    return format_scalar(obj) if isinstance(obj, Scalar) else str(obj)


def _algebra(args, default: str, allowed: Sequence[str] | None = None):
    name = args.algebra or default
    if allowed is not None and name not in allowed:
        raise UsageError(f"{args.command} needs --algebra in {{{', '.join(allowed)}}}, got {name}")
    return build(name, args.faults)


def _hopf_algebra(args):
    alg = _algebra(args, "kq11")
    if alg.hopf is None:
        raise UsageError(f"{alg.name} has no Hopf structure")
    return alg


def _fixed_algebra(args, name: str):
    if args.algebra not in (None, name):
        raise UsageError(f"{args.command} works in {name}; --algebra {args.algebra} is not supported")


def _matrix(args):
    alg = _algebra(args, "kq11", ("kq11", "glq11"))
    return matrices.plane_matrix(args.faults) if alg.name == "kq11" else matrices.generic_matrix(args.faults)


def _operator(op: str, f_name: str, faults):
    if op == "N":
        return calculus.number_op()
    if op == "Dtheta":
        return calculus.dtheta_op(faults=faults)
    fv = calculus.F_BINDINGS[f_name]
    return calculus.dx_op(fv) if op == "Dx" else calculus.tx_op(fv)


# -- commands -------------------------------------------------------------------------


def _compute(args):
    cmd = args.command
    if cmd == "normalize":
        alg = _algebra(args, "kq11")
        return alg.name, parse_element(_expression(args), alg.pres)
    if cmd in ("coproduct", "counit", "antipode"):
        alg = _hopf_algebra(args)
        e = parse_element(_expression(args), alg.pres)
        return alg.name, getattr(alg.hopf, cmd)(e)
    if cmd == "sdet":
        m = _matrix(args)
        return m.pres.name, matrices.sdet(m)
    if cmd == "inverse":
        m = _matrix(args)
        return m.pres.name, matrices.inverse(m)
    if cmd == "power":
        m = _matrix(args)
        return m.pres.name, matrices.power(m, args.n)
    if cmd == "pair":
        _fixed_algebra(args, "kq11")
        pr = Pairing(args.faults)
        plane = args.plane
        if args.file is not None:
            if plane is not None:
                raise UsageError("give either a plane expression or --file, not both")
            args.expr = None
            plane = _expression(args)
        if plane is None:
            raise UsageError("pair needs a superplane expression")
        return "kq11", pr.pair(parse_dual(args.dual), parse_element(plane, pr.pres))
    if cmd == "d":
        _fixed_algebra(args, "kq11")
        fa = calculus.FormAlgebra(calculus.F_BINDINGS[args.f_value])
        return f"forms(F={args.f_value})", fa.d(parse_element(_expression(args), fa.pres))
    if cmd == "act":
        _fixed_algebra(args, "kq11")
        op = _operator(args.op, args.f_value, args.faults)
        return "kq11", op(parse_element(_expression(args), op.pres))
    raise UsageError(f"unknown command {cmd}")


def _emit(args, algebra: str | None, payload, out) -> None:
    if args.format == "json":
        doc = {"command": args.command, "algebra": algebra, "result": payload}
        out.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    else:
        out.write((payload if isinstance(payload, str) else "\n".join(payload)) + "\n")


def _verify(args, out) -> int:
    if args.settings:
        raise UsageError("verify runs symbolically; --set applies to single computations")
    if args.algebra is not None:
        raise UsageError("verify selects algebras through the suite name, e.g. hopf:kq11")
    reports = []
    for name in _suite_names(args.suite):
        start = time.perf_counter()
        (report,) = run_suite(name, args.faults, args.max_degree, args.seed)
        if args.timing:
            report.elapsed = time.perf_counter() - start
        reports.append(report)
    ok = all(r.passed for r in reports)
    if args.format == "json":
        _emit(args, None, {"status": "pass" if ok else "fail", "suites": [r.as_dict() for r in reports]}, out)
    else:
        lines = [r.render_text() for r in reports]
        failed = [r.suite for r in reports if not r.passed]
        tail = f"verify {args.suite}: {'PASS' if ok else 'FAIL'}"
        if failed:
            tail += f" (failing suites: {', '.join(failed)})"
        _emit(args, None, [*lines, tail], out)
    return 0 if ok else 1


def _suite_names(suite: str) -> list[str]:
    if suite == "all":
        return [n for n in SUITE_NAMES if n != "all"]
    if suite not in SUITE_NAMES:
        raise UnknownSuite(f"unknown suite {suite!r}; choose from {', '.join(SUITE_NAMES)}")
    return [suite]


def run(argv: Sequence[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.faults = sorted(check_faults(args.faults))
        if args.command == "faults":
            _emit(args, None, [f"{k}: {v}" for k, v in sorted(FAULTS.items())] if args.format == "text" else dict(FAULTS), out)
            return 0
        if args.command == "verify":
            return _verify(args, out)
        bindings = _bindings(args.settings)
        algebra, result = _compute(args)
        _emit(args, algebra, _render(_spec(result, bindings)), out)
        return 0
    except (ParseError, EvaluationError, UsageError, UnknownSuite, UnknownFault, UnknownAlgebra) as exc:
        err.write(f"error: {exc.args[0] if isinstance(exc, KeyError) else exc}\n")
        return 2
    except (NotInvertible, PresentationError, SpecializationError, ZeroDivisionError) as exc:
        err.write(f"error: {exc}\n")
        return 2


def main(argv: Sequence[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
