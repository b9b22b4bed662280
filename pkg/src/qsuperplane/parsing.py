"""Expression syntax shared by scalars, algebra elements and dual words.

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := atom ('^' ['-'] int)?
    atom   := int | ident | '(' expr ')'

Juxtaposition is not multiplication.  The identifiers ``q p F i`` are scalar
symbols; every other identifier must be a generator of the chosen vocabulary.
A divisor must be free of generators.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Iterable

from .scalars import F, I, P, Q, Scalar, ZERO

SCALAR_SYMBOLS = {"q": Q, "p": P, "F": F, "i": I}


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        self.message, self.line, self.column = message, line, col
        super().__init__(f"line {line}, column {col}: {message}")


# -- AST ---------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class Neg:
    arg: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exp: int


Node = Num | Sym | Gen | Neg | BinOp | Pow

_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.)", re.S)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN.match(text, pos)
        if m.group(1) is not None:
            out.append(("int", m.group(1), pos))
        elif m.group(2) is not None:
            out.append(("ident", m.group(2), pos))
        else:
            ch = m.group(3)
            if ch not in "+-*/^().":
                raise ParseError(f"unexpected character {ch!r}", text, pos)
            out.append((ch, ch, pos))
        pos = m.end()
    out.append(("end", "", len(text.rstrip()) if text.strip() else 0))
    return out


class _Parser:
    def __init__(self, text: str, generators: Iterable[str]):
        self.text = text
        self.generators = set(generators)
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self, kind: str | None = None) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            want = "integer" if kind == "int" else repr(kind)
            got = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {want}, found {got}", self.text, tok[2])
        self.i += 1
        return tok

    def error(self, message: str, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, self.text, tok[2])

    def parse(self) -> Node:
        if self.peek()[0] == "end":
            self.error("empty expression")
        node = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            if tok[0] in ("int", "ident", "("):
                self.error("juxtaposition is not multiplication; insert '*'")
            self.error(f"unexpected {tok[1]!r}")
        return node

    def expr(self) -> Node:
        tok = self.peek()
        if tok[0] in ("+", "-"):
            self.take()
            node = self.term()
            if tok[0] == "-":
                node = Neg(node)
        else:
            node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.peek()[0] in ("*", "/"):
            op_tok = self.take()
            rhs_tok = self.peek()
            rhs = self.factor()
            if op_tok[0] == "/" and _has_generator(rhs):
                self.error("divisor must be a scalar; write a power ^-1 instead", rhs_tok)
            node = BinOp(op_tok[0], node, rhs)
        return node

    def factor(self) -> Node:
        node = self.atom()
        if self.peek()[0] == "^":
            self.take()
            sign = 1
            if self.peek()[0] == "-":
                self.take()
                sign = -1
            tok = self.peek()
            if tok[0] == "(":
                self.error("exponent must be an integer literal (fractional exponents are not supported)")
            exp = int(self.take("int")[1]) * sign
            if self.peek()[0] == ".":
                self.error("fractional exponents are not supported")
            node = Pow(node, exp)
            if self.peek()[0] == "^":
                self.error("chained powers need parentheses")
        return node

    def atom(self) -> Node:
        tok = self.peek()
        if tok[0] == "int":
            self.take()
            return Num(int(tok[1]))
        if tok[0] == "ident":
            self.take()
            if tok[1] in SCALAR_SYMBOLS:
                return Sym(tok[1])
            if tok[1] in self.generators:
                return Gen(tok[1])
            self.error(f"unknown identifier {tok[1]!r}", tok)
        if tok[0] == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        self.error("expected a number, identifier or '('" if tok[0] != "end" else "unexpected end of input")


def _has_generator(node: Node) -> bool:
    if isinstance(node, Gen):
        return True
    if isinstance(node, Neg):
        return _has_generator(node.arg)
    if isinstance(node, BinOp):
        return _has_generator(node.left) or _has_generator(node.right)
    if isinstance(node, Pow):
        return _has_generator(node.base)
    return False


def parse(text: str, generators: Iterable[str] = ()) -> Node:
    return _Parser(text, generators).parse()


# -- evaluation ----------------------------------------------------------------


class EvaluationError(ValueError):
    pass


def evaluate(node: Node, scalar: Callable[[Scalar], object], gen: Callable[[str], object]):
    """Evaluate ``node`` in a ring given by constructors for scalars and generators."""

    def scalar_value(n: Node) -> Scalar:
        return evaluate(n, lambda s: s, _no_generators)

    def go(n: Node):
        if isinstance(n, Num):
            return scalar(Scalar.from_rational(n.value))
        if isinstance(n, Sym):
            return scalar(SCALAR_SYMBOLS[n.name])
        if isinstance(n, Gen):
            return gen(n.name)
        if isinstance(n, Neg):
            return -go(n.arg)
        if isinstance(n, Pow):
            try:
                if not _has_generator(n.base):
                    return scalar(scalar_value(n.base) ** n.exp)
                return go(n.base) ** n.exp
            except (ZeroDivisionError, ArithmeticError) as exc:
                raise EvaluationError(f"cannot raise to the power {n.exp}: {exc}") from None
        if isinstance(n, BinOp):
            if n.op == "/":
                d = scalar_value(n.right)
                if d.is_zero:
                    raise EvaluationError("division by zero")
                return go(n.left) * d.inverse()
            left, right = go(n.left), go(n.right)
            if n.op == "+":
                return left + right
            if n.op == "-":
                return left - right
            return left * right
        raise TypeError(f"not an expression node: {n!r}")

    return go(node)


def _no_generators(name: str):
    raise EvaluationError(f"generator {name} in a scalar context")


def parse_scalar(text: str) -> Scalar:
    node = parse(text)
    out = evaluate(node, lambda s: s, _no_generators)
    return out if isinstance(out, Scalar) else ZERO + out


def parse_element(text: str, pres):
    """Parse into an Element of ``pres``; inverse names such as ``xinv`` are generators too."""
    names = set()
    for letter in pres.alphabet():
        names.add(pres.letter_name(letter))
    node = parse(text, names)
    return evaluate(node, pres.scalar, pres.gen)


def parse_dual(text: str):
    """Parse a dual word expression in ``chi, phi, Q, Qinv``; ``Q^-n`` means ``Qinv^n``."""
    from .duality import DUAL_LETTERS, DualElement

    node = parse(text, DUAL_LETTERS)

    def fix(n: Node) -> Node:
        if isinstance(n, Pow):
            if n.exp < 0:
                if isinstance(n.base, Gen) and n.base.name in ("Q", "Qinv"):
                    other = "Qinv" if n.base.name == "Q" else "Q"
                    return Pow(Gen(other), -n.exp)
                if not _has_generator(n.base):
                    return n
                raise EvaluationError("negative powers in dual expressions are defined only for Q and Qinv")
            return Pow(fix(n.base), n.exp)
        if isinstance(n, Neg):
            return Neg(fix(n.arg))
        if isinstance(n, BinOp):
            return BinOp(n.op, fix(n.left), fix(n.right))
        return n

    return evaluate(fix(node), DualElement.scalar, DualElement.word)


__all__ = [
    "BinOp",
    "EvaluationError",
    "Gen",
    "Neg",
    "Num",
    "ParseError",
    "Pow",
    "SCALAR_SYMBOLS",
    "Sym",
    "evaluate",
    "parse",
    "parse_dual",
    "parse_element",
    "parse_scalar",
]
