"""Surface syntax for algebra elements: tokenizer, precedence parser, printer.

Grammar, loosest to tightest::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*      # '*' is noncommutative
    unary   := ('-' | '+') unary | power
    power   := postfix ('^' ['-'] INT)?
    postfix := atom "'"*                       # ' is the adjoint
    atom    := INT | 'q' | 'u[' INT ',' INT ']' | 'a'..'d' (N = 2) | '(' expr ')'

Division is only by nonzero scalars and negative exponents only on scalars.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgElement, generator, letter_name
from .qcoeff import ONE, Q, QScalar

__all__ = [
    "ParseError",
    "Num",
    "QSym",
    "Gen",
    "BinOp",
    "Neg",
    "Pow",
    "Adjoint",
    "tokenize",
    "parse",
    "evaluate",
    "parse_element",
    "parse_scalar",
    "format_element",
    "format_word",
]


class ParseError(ValueError):
    def __init__(self, msg, pos=None):
        self.pos = pos
        super().__init__(msg if pos is None else f"{msg} (at position {pos})")


@dataclass(frozen=True)
class Num:
    value: Fraction
    pos: int = 0


@dataclass(frozen=True)
class QSym:
    pos: int = 0


@dataclass(frozen=True)
class Gen:
    i: int
    j: int
    pos: int = 0


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    pos: int = 0


@dataclass(frozen=True)
class Neg:
    operand: object
    pos: int = 0


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int
    pos: int = 0


@dataclass(frozen=True)
class Adjoint:
    operand: object
    pos: int = 0


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(.))")


def tokenize(text: str):
    """List of (kind, value, pos); kind is 'int', 'name' or the operator char."""
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if m.group(1) is not None:
            out.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), start))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^'()[],":
                raise ParseError(f"unexpected character {ch!r}", start)
            out.append((ch, ch, start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text, n):
        self.toks = tokenize(text)
        self.k = 0
        self.n = n

    def peek(self):
        return self.toks[self.k]

    def take(self, kind=None):
        tok = self.toks[self.k]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind!r}, found {what}", tok[2])
        self.k += 1
        return tok

    def parse(self):
        e = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return e

    def expr(self):
        left = self.term()
        while self.peek()[0] in ("+", "-"):
            op, _, pos = self.take()
            left = BinOp(op, left, self.term(), pos)
        return left

    def term(self):
        left = self.unary()
        while self.peek()[0] in ("*", "/"):
            op, _, pos = self.take()
            left = BinOp(op, left, self.unary(), pos)
        return left

    def unary(self):
        kind, _, pos = self.peek()
        if kind == "-":
            self.take()
            return Neg(self.unary(), pos)
        if kind == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.postfix()
        if self.peek()[0] == "^":
            _, _, pos = self.take()
            sign = 1
            if self.peek()[0] == "-":
                self.take()
                sign = -1
            _, val, _ = self.take("int")
            return Pow(base, sign * val, pos)
        return base

    def postfix(self):
        node = self.atom()
        while self.peek()[0] == "'":
            _, _, pos = self.take()
            node = Adjoint(node, pos)
        return node

    def atom(self):
        kind, val, pos = self.take()
        if kind == "int":
            return Num(Fraction(val), pos)
        if kind == "(":
            inner = self.expr()
            self.take(")")
            return inner
        if kind == "name":
            if val == "q":
                return QSym(pos)
            if val == "u":
                self.take("[")
                _, i, ipos = self.take("int")
                self.take(",")
                _, j, _ = self.take("int")
                self.take("]")
                if not (1 <= i <= self.n and 1 <= j <= self.n):
                    raise ParseError(f"index u[{i},{j}] out of range for N = {self.n}", ipos)
                return Gen(i, j, pos)
            if val in ("a", "b", "c", "d"):
                if self.n != 2:
                    raise ParseError(f"alias {val!r} is only available for N = 2", pos)
                i, j = divmod("abcd".index(val), 2)
                return Gen(i + 1, j + 1, pos)
            raise ParseError(f"unknown symbol {val!r}", pos)
        what = "end of input" if kind == "end" else repr(val)
        raise ParseError(f"unexpected {what}", pos)


def parse(text: str, n: int):
    """Parse surface syntax into an Expr tree for matrix size ``n``."""
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"declared N must be >= 2, got {n!r}")
    return _Parser(text, n).parse()


def evaluate(node, n: int) -> AlgElement:
    from .hopf import star

    if isinstance(node, Num):
        return AlgElement.scalar(n, node.value)
    if isinstance(node, QSym):
        return AlgElement.scalar(n, Q)
    if isinstance(node, Gen):
        return generator(n, node.i, node.j)
    if isinstance(node, Neg):
        return -evaluate(node.operand, n)
    if isinstance(node, Adjoint):
        return star(evaluate(node.operand, n))
    if isinstance(node, BinOp):
        left, right = evaluate(node.left, n), evaluate(node.right, n)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        divisor = right.scalar_value()
        if divisor is None or divisor.is_zero():
            raise ParseError("division is only defined by a nonzero scalar", node.pos)
        return left.scale(divisor.inv())
    if isinstance(node, Pow):
        base = evaluate(node.base, n)
        if node.exponent < 0:
            s = base.scalar_value()
            if s is None or s.is_zero():
                raise ParseError("negative exponent on a non-invertible expression", node.pos)
            return AlgElement.scalar(n, s ** node.exponent)
        return base ** node.exponent
    raise TypeError(f"not an expression node: {node!r}")


def parse_element(text: str, n: int) -> AlgElement:
    return evaluate(parse(text, n), n)


def parse_scalar(text: str) -> QScalar:
    """Parse an element of Q(q) such as ``q^2/(q^2 + 1)`` or ``7/5``."""
    v = parse_element(text, 2).scalar_value()
    if v is None:
        raise ParseError("expected a scalar expression in q")
    return v


# -- printing ------------------------------------------------------------


def format_word(word, n: int) -> str:
    if not word:
        return "1"
    parts = []
    k = 0
    while k < len(word):
        m = k
        while m < len(word) and word[m] == word[k]:
            m += 1
        name = letter_name(word[k], n)
        parts.append(name if m - k == 1 else f"{name}^{m - k}")
        k = m
    return "*".join(parts)


def _format_term(word, c: QScalar, n: int):
    """(sign, body) for one term."""
    if c.is_laurent() and c.num.is_monomial():
        (_, v), = c.num.items()
        mag = -c if v < 0 else c
        sign = "-" if v < 0 else "+"
        if not word:
            return sign, str(mag)
        if mag == ONE:
            return sign, format_word(word, n)
        return sign, f"{mag}*{format_word(word, n)}"
    if not word:
        return "+", str(c)
    return "+", f"({c})*{format_word(word, n)}"


def format_element(x: AlgElement) -> str:
    if x.is_zero():
        return "0"
    parts = [_format_term(w, c, x.n) for w, c in x.sorted_terms()]
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
