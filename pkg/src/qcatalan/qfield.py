"""Exact rational functions of q, extended by a root s = q^(1/L).

A :class:`QRat` stores a numerator and denominator as dense polynomials in
``s`` with rational coefficients, together with the root order ``L``.  Values
are kept in canonical form: ``gcd(num, den) = 1``, ``den`` monic and ``L``
minimal, so equality is plain coefficient comparison.  Two values with
different root orders are lifted to ``lcm(L1, L2)`` before any arithmetic.

Polynomial multiplication and gcd are delegated to FLINT's ``fmpq_poly``.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

import flint

from .errors import IncompatibleRootError, MalformedValueError, NotInvertibleError, PoleError

__all__ = [
    "QRat",
    "QExp",
    "ONE",
    "ZERO",
    "Q",
    "as_qexp",
    "qr_normalize",
    "qr_qpow",
    "qr_subst_inverse_q",
    "qr_eval_q1",
]

_Poly = flint.fmpq_poly

# Exponents of q are plain reduced fractions.
QExp = Fraction


def as_qexp(e):
    """Coerce an int, Fraction or ``"a/b"`` string to a reduced exponent."""
    if isinstance(e, Fraction):
        return e
    return Fraction(e)


def _to_fraction(c):
    return Fraction(int(c.p), int(c.q))


def _exponent_gcd(poly):
    g = 0
    for i, c in enumerate(poly.coeffs()):
        if c != 0:
            g = gcd(g, i)
            if g == 1:
                return 1
    return g


def _inflate(poly, k):
    if k == 1:
        return poly
    cs = poly.coeffs()
    if not cs:
        return poly
    out = [0] * ((len(cs) - 1) * k + 1)
    for i, c in enumerate(cs):
        out[i * k] = c
    return _Poly(out)


def _deflate(poly, k):
    if k == 1:
        return poly
    return _Poly(poly.coeffs()[::k])


def _coerce_poly(x):
    if isinstance(x, _Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return _Poly([flint.fmpq(x.numerator, x.denominator)])
    if isinstance(x, (list, tuple)):
        return _Poly([flint.fmpq(Fraction(c).numerator, Fraction(c).denominator) for c in x])
    raise TypeError(f"cannot build a polynomial from {type(x).__name__}")


class QRat:
    """An exact element of Q(q^(1/L)).

    ``num`` and ``den`` accept a FLINT ``fmpq_poly``, an int/Fraction, or a
    dense coefficient list in ascending powers of ``s = q^(1/L)``.
    """

    __slots__ = ("num", "den", "L", "_hash")

    def __init__(self, num=0, den=1, L=1):
        if not isinstance(L, int) or L < 1:
            raise MalformedValueError(f"root order must be a positive integer, got {L!r}")
        num = _coerce_poly(num)
        den = _coerce_poly(den)
        if den.is_zero():
            raise MalformedValueError("zero denominator")
        self._set_canonical(num, den, L)

    @classmethod
    def _make(cls, num, den, L):
        obj = cls.__new__(cls)
        if den.is_zero():
            raise MalformedValueError("zero denominator")
        obj._set_canonical(num, den, L)
        return obj

    @classmethod
    def _raw(cls, num, den, L):
        # caller guarantees canonical form
        obj = cls.__new__(cls)
        obj.num, obj.den, obj.L, obj._hash = num, den, L, None
        return obj

    def _set_canonical(self, num, den, L):
        self._hash = None
        if num.is_zero():
            self.num, self.den, self.L = _Poly([]), _Poly([1]), 1
            return
        if not den.is_one():
            g = num.gcd(den)
            if not g.is_one():
                num = num // g
                den = den // g
            lc = den.leading_coefficient()
            if lc != 1:
                inv = 1 / lc
                num = num * inv
                den = den * inv
        if L > 1:
            d = gcd(L, _exponent_gcd(num), _exponent_gcd(den))
            if d > 1:
                num, den, L = _deflate(num, d), _deflate(den, d), L // d
        self.num, self.den, self.L = num, den, L

    # ------------------------------------------------------------------ coercion

    @staticmethod
    def coerce(x):
        if isinstance(x, QRat):
            return x
        if isinstance(x, (int, Fraction)):
            return _const(Fraction(x))
        return NotImplemented

    def lift(self, L):
        """Return (num, den) re-expressed at root order ``L`` (a multiple of self.L)."""
        if L % self.L:
            raise IncompatibleRootError(f"root order {L} is not a multiple of {self.L}")
        k = L // self.L
        return _inflate(self.num, k), _inflate(self.den, k)

    def _pair(self, other):
        if self.L == other.L:
            return self.num, self.den, other.num, other.den, self.L
        L = lcm(self.L, other.L)
        a, b = self.lift(L)
        c, d = other.lift(L)
        return a, b, c, d, L

    # ---------------------------------------------------------------- arithmetic

    def __add__(self, other):
        other = QRat.coerce(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        a, b, c, d, L = self._pair(other)
        if b == d:
            return QRat._make(a + c, b, L)
        return QRat._make(a * d + c * b, b * d, L)

    __radd__ = __add__

    def __neg__(self):
        return QRat._raw(-self.num, self.den, self.L)

    def __sub__(self, other):
        other = QRat.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = QRat.coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = QRat.coerce(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        a, b, c, d, L = self._pair(other)
        if b.is_one() and d.is_one():
            if L == 1:
                return QRat._raw(a * c, b, 1)
            return QRat._make(a * c, b, L)
        return QRat._make(a * c, b * d, L)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise NotInvertibleError("inverse of zero")
        return QRat._make(self.den, self.num, self.L)

    def __truediv__(self, other):
        other = QRat.coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = QRat.coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return ONE
        return QRat._make(self.num**n, self.den**n, self.L)

    # ---------------------------------------------------------------- comparison

    def __eq__(self, other):
        other = QRat.coerce(other)
        if other is NotImplemented:
            return other
        return self.L == other.L and self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.L, tuple(self.num.coeffs()), tuple(self.den.coeffs())))
        return self._hash

    def __bool__(self):
        return not self.num.is_zero()

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        """True when the value is a polynomial in s (denominator 1)."""
        return self.den.is_one()

    def numerator_coeffs(self):
        return [_to_fraction(c) for c in self.num.coeffs()]

    def denominator_coeffs(self):
        return [_to_fraction(c) for c in self.den.coeffs()]

    def polynomial_coeffs(self):
        """Coefficients in q of a polynomial value (requires L == 1 and den == 1)."""
        if not self.den.is_one() or self.L != 1:
            raise MalformedValueError(f"{self} is not a polynomial in q")
        return self.numerator_coeffs()

    def q_degree(self):
        """Degree in q of a polynomial value; -1 for zero."""
        if self.is_zero():
            return -1
        return Fraction(self.num.degree(), self.L)

    # ------------------------------------------------------------------- misc ops

    def subst_inverse_q(self):
        """Replace q by 1/q (s by 1/s), renormalized."""
        if self.num.is_zero():
            return self
        dn, dd = self.num.degree(), self.den.degree()
        rn = _Poly(self.num.coeffs()[::-1])
        rd = _Poly(self.den.coeffs()[::-1])
        if dd >= dn:
            rn = rn * _Poly([0] * (dd - dn) + [1])
        else:
            rd = rd * _Poly([0] * (dn - dd) + [1])
        return QRat._make(rn, rd, self.L)

    def eval_q1(self):
        """Exact value at q = 1 of the canonical form."""
        d = self.den(flint.fmpq(1))
        if d == 0:
            raise PoleError(f"{self} has a pole at q = 1")
        return _to_fraction(self.num(flint.fmpq(1))) / _to_fraction(d)

    def eval_s(self, value):
        """Exact value at s = ``value`` (a rational number)."""
        v = flint.fmpq(Fraction(value).numerator, Fraction(value).denominator)
        d = self.den(v)
        if d == 0:
            raise PoleError(f"{self} has a pole at s = {value}")
        return _to_fraction(self.num(v)) / _to_fraction(d)

    # -------------------------------------------------------------- formatting

    def _poly_str(self, poly, latex=False):
        cs = [_to_fraction(c) for c in poly.coeffs()]
        parts = []
        for i, c in enumerate(cs):
            if c == 0:
                continue
            e = Fraction(i, self.L)
            if e == 0:
                mono = ""
            elif e == 1:
                mono = "q"
            elif e.denominator == 1:
                mono = f"q^{{{e.numerator}}}" if latex else f"q^{e.numerator}"
            else:
                mono = f"q^{{{e}}}" if latex else f"q^({e})"
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if a.denominator != 1:
                body = (f"\\frac{{{a.numerator}}}{{{a.denominator}}}" if latex else f"({a})") + mono
            elif a == 1 and mono:
                body = mono
            else:
                body = f"{a.numerator}{mono}"
            parts.append((sign, body))
        if not parts:
            return "0", 1
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += sign + body
        return out, len(parts)

    def to_str(self):
        """Canonical string: ascending q-powers, ``num/den`` with a monic ``den``."""
        n, nterms = self._poly_str(self.num)
        if self.den.is_one():
            return n
        d, dterms = self._poly_str(self.den)
        if nterms > 1:
            n = f"({n})"
        if dterms > 1:
            d = f"({d})"
        return f"{n}/{d}"

    def latex(self):
        n, _ = self._poly_str(self.num, latex=True)
        if self.den.is_one():
            return n
        d, _ = self._poly_str(self.den, latex=True)
        return f"\\frac{{{n}}}{{{d}}}"

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"QRat({self.to_str()!r})"


@lru_cache(maxsize=None)
def _const(c):
    return QRat._raw(_Poly([flint.fmpq(c.numerator, c.denominator)]) if c else _Poly([]), _Poly([1]), 1)


ZERO = _const(Fraction(0))
ONE = _const(Fraction(1))


def qr_normalize(x):
    """Canonical form of ``x``; values are always stored canonically, so this rebuilds and returns it."""
    return QRat._make(x.num, x.den, x.L)


@lru_cache(maxsize=4096)
def _qpow_cached(e, L):
    n = e * L
    if n.denominator != 1:
        raise IncompatibleRootError(f"q^({e}) needs a root order divisible by {e.denominator}, got {L}")
    n = int(n)
    mono = _Poly([0] * abs(n) + [1])
    if n >= 0:
        return QRat._make(mono, _Poly([1]), L)
    return QRat._make(_Poly([1]), mono, L)


def qr_qpow(e, L=None):
    """Return q**e, materialized at root order ``L`` (defaults to e's denominator)."""
    e = as_qexp(e)
    if L is None:
        L = e.denominator
    if L % e.denominator:
        raise IncompatibleRootError(f"q^({e}) needs a root order divisible by {e.denominator}, got {L}")
    return _qpow_cached(e, L)


def qr_subst_inverse_q(x):
    return QRat.coerce(x).subst_inverse_q()


def qr_eval_q1(x):
    return QRat.coerce(x).eval_q1()


Q = qr_qpow(1)
