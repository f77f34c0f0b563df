"""q-Catalan and q-Fuss-Catalan numbers, q-Airy series, and the
Rogers-Ramanujan continued fraction."""

from dataclasses import dataclass
from math import comb

from .errors import DomainError, InsufficientTruncationError
from .fps import ZSeries, pochhammer
from .qfield import ONE, ZERO, as_qexp, qr_eval_q1, qr_qpow

__all__ = [
    "QNumberTable",
    "carlitz",
    "compositions",
    "qfuss",
    "qfuss_via_basis",
    "fuss_catalan",
    "q_airy",
    "rogers_ramanujan_cfrac",
    "coefficient_report",
]


@dataclass(frozen=True)
class QNumberTable:
    """values[n] for n = 0..N, tagged with the rule that produced them."""

    p: int
    values: tuple
    provenance: str

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def at_q1(self):
        return [qr_eval_q1(v) for v in self.values]


def carlitz(n):
    """C_0 = 1, C_r = sum_{0<=i<r} C_i C_(r-1-i) q^((r-1-i)(i+1))."""
    c = [ONE]
    for r in range(1, n + 1):
        acc = ZERO
        for i in range(r):
            acc = acc + c[i] * c[r - 1 - i] * qr_qpow((r - 1 - i) * (i + 1))
        c.append(acc)
    return QNumberTable(2, tuple(c), "carlitz-recursion")


def compositions(total, parts):
    """All tuples of ``parts`` nonnegative integers summing to ``total``, lexicographically."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def _composition_exponent(ks, p):
    cross = 0
    prefix = 0
    for k in ks:
        cross += prefix * k
        prefix += k
    return (p - 1) * cross + sum(j * k for j, k in enumerate(ks))


def qfuss(p, n):
    """C_(p,m) = [m=0] + sum over compositions k of m-1 into p parts of
    prod C_(p,k_j) q^((p-1) sum_(i<j) k_i k_j + sum_j (j-1) k_j)."""
    if p < 2:
        raise DomainError(f"p must be at least 2, got {p}")
    c = [ONE]
    for m in range(1, n + 1):
        acc = ZERO
        for ks in compositions(m - 1, p):
            term = qr_qpow(_composition_exponent(ks, p))
            for k in ks:
                term = term * c[k]
            acc = acc + term
        c.append(acc)
    return QNumberTable(p, tuple(c), "composition-recursion")


def qfuss_via_basis(p, n):
    """Solve sum_m C_(p,m) z^m (z;q)_(m(p-1)+1) = 1 degree by degree."""
    if p < 2:
        raise DomainError(f"p must be at least 2, got {p}")
    residual = [ONE] + [ZERO] * n
    c = []
    for m in range(n + 1):
        cm = residual[m]
        c.append(cm)
        if not cm:
            continue
        for d, v in pochhammer(m * (p - 1) + 1, n - m).coeffs.items():
            residual[m + d] = residual[m + d] - cm * v
    return QNumberTable(p, tuple(c), "basis-identity")


def fuss_catalan(p, n):
    """binom(pn, n)/((p-1)n + 1)."""
    return comb(p * n, n) // ((p - 1) * n + 1)


def q_airy(p, n, inverse_q=False):
    """sum_k (-1)^k b^e(k) z^k / (b;b)_k with b = q or 1/q, to z^n.

    e(k) = p binom(k,2) for p >= 2; p = 1 selects the classical series with
    e(k) = k^2.
    """
    if p < 1:
        raise DomainError(f"p must be positive, got {p}")
    base = as_qexp(-1 if inverse_q else 1)
    coeffs = {}
    poch = ONE
    for k in range(n + 1):
        if k:
            poch = poch * (ONE - qr_qpow(base * k))
        e = k * k if p == 1 else p * comb(k, 2)
        v = qr_qpow(base * e) / poch
        coeffs[k] = -v if k % 2 else v
    return ZSeries(coeffs, trunc=n)


def rogers_ramanujan_cfrac(depth, n):
    """1/(1 - (z/q^0)/(1 - (z/q^1)/(1 - ...))) cut at ``depth`` levels, to z^n.

    Replacing the innermost tail by 1 perturbs the result only from z^(depth+1).
    """
    if depth < n:
        raise InsufficientTruncationError(f"depth {depth} determines the series only to z^{depth}, asked z^{n}")
    g = ZSeries.one(n)
    for level in range(depth - 1, -1, -1):
        inner = g.shift(1).truncate(n).scale(qr_qpow(-level))
        g = (ZSeries.one(n) - inner).recip(n)
    return g


def coefficient_report(table):
    """Per entry: q-degree, whether it is a polynomial, whether all coefficients are >= 0."""
    out = []
    for v in table.values:
        poly = v.is_polynomial() and v.L == 1
        coeffs = v.polynomial_coeffs() if poly else None
        out.append(
            {
                "polynomial": poly,
                "degree": v.q_degree() if poly else None,
                "nonnegative": poly and all(c >= 0 for c in coeffs),
            }
        )
    return out
