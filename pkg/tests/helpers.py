"""Conversions for writing expected values as sympy expressions in q."""

from fractions import Fraction

import sympy as sp

from qcatalan.fps import ZSeries
from qcatalan.qfield import QRat

q = sp.Symbol("q")


def _coeffs(expr):
    poly = sp.Poly(expr, q)
    return [Fraction(int(sp.numer(c)), int(sp.denom(c))) for c in reversed(poly.all_coeffs())]


def qv(expr):
    """A rational function of q given as a sympy expression or string."""
    if isinstance(expr, str):
        expr = sp.sympify(expr, locals={"q": q})
    num, den = sp.fraction(sp.cancel(sp.together(sp.sympify(expr))))
    return QRat(_coeffs(num), _coeffs(den))


def zs(values, trunc=None):
    """A z-series from a list of q-expressions (index = z-degree)."""
    return ZSeries({d: qv(v) for d, v in enumerate(values)}, trunc=trunc)
