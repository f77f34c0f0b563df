"""Expression parser for series input.

Grammar, loosest binding first::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := '-' unary | power
    power  := atom ('^' ['-'] INT)?
    atom   := INT ['/' INT] | 'z' | 't' | 'q' | '(' expr ')'

Exponents on z and t must be nonnegative; q may carry negative ones.
Expressions lower to a finite map (i, j) -> coefficient of z^i t^j, with
coefficients Laurent polynomials in q.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ParseError
from .fps import ZSeries, ZTSeries
from .qfield import ONE, ZERO, QRat, qr_qpow

__all__ = [
    "Num",
    "Var",
    "Neg",
    "BinOp",
    "Pow",
    "parse_expr",
    "lower",
    "lower_zseries",
    "lower_ztseries",
    "pretty",
]

VARIABLES = ("z", "t", "q")


@dataclass(frozen=True)
class Num:
    value: Fraction
    pos: int = 0


@dataclass(frozen=True)
class Var:
    name: str
    pos: int = 0


@dataclass(frozen=True)
class Neg:
    operand: object
    pos: int = 0


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    pos: int = 0


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int
    pos: int = 0


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*^()]))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}, found {val or 'end of input'!r}", pos)

    def parse(self):
        node = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", pos)
        return node

    def expr(self):
        node = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            _, op, pos = self.take()
            node = BinOp(op, node, self.term(), pos)
        return node

    def term(self):
        node = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            _, op, pos = self.take()
            node = BinOp(op, node, self.unary(), pos)
        return node

    def unary(self):
        kind, val, pos = self.peek()
        if kind == "op" and val == "-":
            self.take()
            return Neg(self.unary(), pos)
        return self.power()

    def power(self):
        node = self.atom()
        kind, val, pos = self.peek()
        if kind == "op" and val == "^":
            self.take()
            sign = 1
            kind, val, epos = self.peek()
            if kind == "op" and val == "-":
                self.take()
                sign = -1
                kind, val, epos = self.peek()
            if kind != "num" or "/" in val:
                raise ParseError("exponent must be an integer", epos)
            self.take()
            exp = sign * int(val)
            if exp < 0 and not (isinstance(node, Var) and node.name == "q"):
                raise ParseError("only q may carry a negative exponent", epos)
            node = Pow(node, exp, pos)
        return node

    def atom(self):
        kind, val, pos = self.take()
        if kind == "num":
            return Num(Fraction(val), pos)
        if kind == "name":
            if val not in VARIABLES:
                raise ParseError(f"unknown identifier {val!r}", pos)
            return Var(val, pos)
        if kind == "op" and val == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        raise ParseError(f"unexpected {val or 'end of input'!r}", pos)


def parse_expr(text):
    """Parse ``text`` into an AST; errors carry the character offset."""
    return _Parser(text).parse()


# ------------------------------------------------------------------ lowering


def _padd(a, b, sign=1):
    out = dict(a)
    for k, v in b.items():
        nv = out.get(k, ZERO) + (v if sign == 1 else -v)
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def _pmul(a, b):
    out = {}
    for (i, j), u in a.items():
        for (k, l), v in b.items():
            key = (i + k, j + l)
            nv = out.get(key, ZERO) + u * v
            if nv:
                out[key] = nv
            else:
                out.pop(key, None)
    return out


def lower(node):
    """Evaluate an AST to {(i, j): c} meaning sum c z^i t^j."""
    if isinstance(node, Num):
        return {(0, 0): QRat.coerce(node.value)} if node.value else {}
    if isinstance(node, Var):
        if node.name == "q":
            return {(0, 0): qr_qpow(1)}
        return {(1, 0) if node.name == "z" else (0, 1): ONE}
    if isinstance(node, Neg):
        return {k: -v for k, v in lower(node.operand).items()}
    if isinstance(node, BinOp):
        a, b = lower(node.left), lower(node.right)
        if node.op == "+":
            return _padd(a, b)
        if node.op == "-":
            return _padd(a, b, -1)
        return _pmul(a, b)
    if isinstance(node, Pow):
        if node.exponent < 0:
            return {(0, 0): qr_qpow(node.exponent)}
        base = lower(node.base)
        out = {(0, 0): ONE}
        for _ in range(node.exponent):
            out = _pmul(out, base)
        return out
    raise TypeError(f"not an expression node: {node!r}")


def _as_poly(source):
    if isinstance(source, str):
        source = parse_expr(source)
    if isinstance(source, dict):
        return source
    return lower(source)


def lower_zseries(source, trunc=None):
    """Lower to a univariate series in z; fails if t occurs."""
    poly = _as_poly(source)
    if any(j for (_, j) in poly):
        raise DomainError("expression references t but a series in z alone was requested")
    return ZSeries({i: c for (i, _), c in poly.items()}, trunc=trunc)


def lower_ztseries(source, trunc_z=None, trunc_t=None):
    return ZTSeries(_as_poly(source), trunc_z, trunc_t)


# ---------------------------------------------------------------- printing


def _laurent_terms(c):
    """(coefficient, q-exponent) pairs of a Laurent polynomial in q."""
    den = c.denominator_coeffs()
    shift = len(den) - 1
    if c.L != 1 or den[-1] != 1 or any(den[:-1]):
        raise DomainError(f"{c} is not a Laurent polynomial in q")
    return [(a, k - shift) for k, a in enumerate(c.numerator_coeffs()) if a]


def _fmt_coeff(a):
    return str(a) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"


def pretty(poly):
    """Print {(i, j): c} as a sum of c*q^k*z^i*t^j terms in a fixed order."""
    if not isinstance(poly, dict):
        poly = _as_poly(poly)
    parts = []
    for (i, j) in sorted(poly):
        for a, k in _laurent_terms(poly[(i, j)]):
            factors = []
            for name, e in (("q", k), ("z", i), ("t", j)):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            mag = abs(a)
            if mag != 1 or not factors:
                factors.insert(0, _fmt_coeff(mag))
            parts.append(("-" if a < 0 else "+", "*".join(factors)))
    if not parts:
        return "0"
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
