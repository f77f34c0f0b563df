"""p-ary powers, the operators U, the diamond map and generating functions.

Everything here is parameterized by a base ``b = q^base`` with
``base`` in {1, -1} in practice, so that the objects attached to
``(phi, 1/q)`` are computed by the same code as those attached to
``(phi, q)``.  Coefficients of ``phi`` are never rewritten by the base
change unless asked.
"""

from dataclasses import dataclass, replace
from fractions import Fraction
from math import comb, lcm

from .catalan import catalan_from_phi
from .errors import DomainError, InsufficientTruncationError
from .fps import ZSeries
from .qfield import ONE, ZERO, QExp, as_qexp, qr_qpow

__all__ = [
    "PAryContext",
    "pary_power",
    "garsia_power",
    "kp_transform",
    "pary_dual_coeffs",
    "diamond",
    "u_apply",
    "roof",
    "star",
    "tgen_from_dual",
    "tgen_functional",
    "tgen_ratio",
    "theta_constant_term",
    "theta_series",
    "bn_closed_form",
]


@dataclass(frozen=True, eq=False)
class PAryContext:
    """A series phi of order >= 1, an arity p >= 2 and a base b = q^base."""

    phi: ZSeries
    p: int
    base: QExp = Fraction(1)

    def __post_init__(self):
        if self.p < 2:
            raise DomainError(f"p must be at least 2, got {self.p}")
        if self.phi.low < 0 or self.phi.coeffs.get(0):
            raise DomainError("phi must have order at least 1")
        object.__setattr__(self, "base", as_qexp(self.base))

    @property
    def root_order(self):
        """Smallest root order on which all exponents used here are integral."""
        return lcm(2, self.p - 1)

    def b(self, e):
        """b^e as an element of the field."""
        return qr_qpow(self.base * e)

    def inverted(self, phi=None):
        """The context for (phi', 1/b)."""
        return replace(self, phi=self.phi if phi is None else phi, base=-self.base)

    def need(self, n):
        if self.phi.trunc is not None and self.phi.trunc < n:
            raise InsufficientTruncationError(f"phi known only to z^{self.phi.trunc}, need z^{n}")

    def catalan(self):
        """The Catalan series t - t phi(t^(p-1) z); only meaningful for base q."""
        return catalan_from_phi(self.phi, self.p)


def pary_power(ctx, k, trunc):
    """phi_{p,k,b}(z) = z^k prod_{0<=j<k(p-1)} (1 - phi(b^j z)), to z^trunc."""
    if k > trunc:
        return ZSeries({}, trunc=trunc)
    depth = trunc - k
    ctx.need(depth)
    one_minus = (ZSeries.one() - ctx.phi).truncate(depth)
    out = ZSeries.one(depth)
    for j in range(k * (ctx.p - 1)):
        out = (out * one_minus.dilate(ctx.base * j)).truncate(depth)
    return out.shift(k).truncate(trunc)


def garsia_power(psi, k, trunc, base=1):
    """psi_[k,b](z) = prod_{0<=j<k} psi(b^j z) for psi of order exactly 1."""
    if psi.order() != 1:
        raise DomainError("Garsia powers need a series of order exactly 1")
    base = as_qexp(base)
    out = ZSeries.one(trunc)
    for j in range(k):
        out = (out * psi.dilate(base * j)).truncate(trunc)
    return out.truncate(trunc)


def kp_transform(f, p):
    """K_p f(z) = f(z^(p-1))."""
    return f.subs_power(p - 1)


def pary_dual_coeffs(ctx, nmax):
    """T_{n, n(p-1)+1} for n <= nmax.

    Solves sum_n b^(-n) T_n phi_{p,n,b}(bz) = 1/(1 - phi(z)); the z^n
    coefficient of b^(-n) phi_{p,n,b}(bz) is 1, so each T_n is read off.
    """
    ctx.need(nmax)
    rhs = (ZSeries.one() - ctx.phi).truncate(nmax).recip(nmax)
    residual = [rhs[n] for n in range(nmax + 1)]
    out = []
    for n in range(nmax + 1):
        t_n = residual[n]
        out.append(t_n)
        if not t_n:
            continue
        term = pary_power(ctx, n, nmax).dilate(ctx.base).scale(ctx.b(-n) * t_n)
        for d, c in term.coeffs.items():
            residual[d] = residual[d] - c
    return out


def _diamond_exponent(n, p):
    # binom(n(p-1)+1, 2)/(p-1)
    return Fraction(n * (n * (p - 1) + 1), 2)


def diamond(ctx, nmax, dual=None):
    """phi^<>(z) = -sum_{n>=1} T_n b^(-binom(n(p-1)+1, 2)/(p-1)) z^n."""
    t = dual if dual is not None else pary_dual_coeffs(ctx, nmax)
    return ZSeries(
        {n: -t[n] * ctx.b(-_diamond_exponent(n, ctx.p)) for n in range(1, nmax + 1)},
        trunc=nmax,
    )


def _u_exponent(k, p):
    # binom(k(p-1), 2)/(p-1)
    return Fraction(k * (k * (p - 1) - 1), 2)


def u_apply(ctx, f, trunc=None, inverse_q=False, transport=False):
    """U_{p,phi,b} f with U z^k = b^(binom(k(p-1),2)/(p-1)) phi_{p,k,b}(z).

    ``inverse_q`` swaps the base b for 1/b.  With ``transport`` the
    coefficients of phi are also sent through q -> 1/q; the default keeps
    them as given, which is the reading under which U_{phi,q} and
    U_{phi<>,1/q} are mutually inverse.
    """
    n = f.trunc if trunc is None else trunc
    if n is None:
        raise ValueError("an exact input series needs an explicit truncation")
    if inverse_q:
        ctx = ctx.inverted()
    if transport:
        ctx = replace(ctx, phi=ctx.phi.subst_inverse_q())
    out = ZSeries({}, trunc=n)
    for k, c in f.coeffs.items():
        if k > n:
            continue
        out = out + pary_power(ctx, k, n).scale(c * ctx.b(_u_exponent(k, ctx.p)))
    return out


def roof(f, iterations=1, base=1):
    """Multiply the z^n coefficient by b^(-iterations * binom(n, 2))."""
    base = as_qexp(base)
    if iterations == 0:
        return f
    return f.map_coeffs(lambda d, c: c * qr_qpow(-base * iterations * comb(d, 2)) if d > 1 else c)


def star(f, trunc, base=1):
    """The g with g(0) = 1 and g(z) = f(z) g(z/b), i.e. prod_n f(z/b^n).

    Coefficientwise g_k (1 - b^-k) = sum_{i=1..k} f_i b^(i-k) g_(k-i).
    """
    base = as_qexp(base)
    if f.low < 0 or f[0] != ONE:
        raise DomainError("star needs constant term 1")
    if f.trunc is not None and f.trunc < trunc:
        raise InsufficientTruncationError(f"f known only to z^{f.trunc}, need z^{trunc}")
    g = [ONE]
    for k in range(1, trunc + 1):
        acc = ZERO
        for i in range(1, k + 1):
            fi = f.coeffs.get(i)
            if fi and g[k - i]:
                acc = acc + fi * g[k - i] * qr_qpow(base * (i - k))
        g.append(acc / (ONE - qr_qpow(-base * k)) if acc else ZERO)
    return ZSeries({k: v for k, v in enumerate(g)}, trunc=trunc)


def tgen_from_dual(ctx, n, dual=None):
    """sum_k b^(-(p-1) binom(k,2)) T_{k,k(p-1)+1} z^k."""
    t = dual if dual is not None else pary_dual_coeffs(ctx, n)
    return ZSeries({k: t[k] * ctx.b(-(ctx.p - 1) * comb(k, 2)) for k in range(n + 1)}, trunc=n)


def tgen_functional(ctx, n):
    """Solve T = 1 + sum_i phi_i z^i b^(-(p-1)binom(i,2)) prod_{0<=j<=(p-1)i} T(b^-j z).

    The z^m coefficient of the right side only uses coefficients of T below m,
    so each pass fixes one more coefficient.
    """
    ctx.need(n)
    p = ctx.p
    phis = [(i, c) for i, c in sorted(ctx.phi.coeffs.items()) if 1 <= i <= n]
    tg = ZSeries.one(0)
    for m in range(1, n + 1):
        cur = tg
        dil = {}
        rhs = ZSeries.one(m)
        for i, c in phis:
            if i > m:
                break
            prod = ZSeries.one(m - i)
            for j in range((p - 1) * i + 1):
                if j not in dil:
                    dil[j] = cur.dilate(-ctx.base * j)
                prod = (prod * dil[j].truncate(m - i)).truncate(m - i)
            rhs = rhs + prod.shift(i).scale(c * ctx.b(-(p - 1) * comb(i, 2)))
        tg = rhs.truncate(m)
    return tg.with_trunc(n)


def tgen_ratio(ctx, n):
    """g(z/b)/g(z) with g = roof(star(1 - phi), p - 1)."""
    ctx.need(n)
    g = roof(star((ZSeries.one() - ctx.phi).truncate(n), n, ctx.base), ctx.p - 1, ctx.base)
    return (g.dilate(-ctx.base) * g.recip(n)).truncate(n)


def theta_series(x, trunc):
    """Coefficients of theta(u, x) = sum_k x^binom(k,2) u^k through u^trunc."""
    return [x ** comb(k, 2) for k in range(trunc + 1)]


def theta_constant_term(ctx, n):
    """T as a ratio of two constant terms pairing a theta series with Phi_(1/b).

    Numerator [u^0] theta(z/(u b), c) Phi(u), denominator [u^0] theta(z/u, c) Phi(u)
    with c = b^(-(p-1)) and Phi = star(1 - phi).  Only the diagonal pairs
    z^k u^-k with u^k survive.
    """
    ctx.need(n)
    c = ctx.b(-(ctx.p - 1))
    theta = theta_series(c, n)
    phi_inv = star((ZSeries.one() - ctx.phi).truncate(n), n, ctx.base)
    numer = {}
    denom = {}
    for k in range(n + 1):
        pair = theta[k] * phi_inv[k]
        if pair:
            numer[k] = pair * ctx.b(-k)
            denom[k] = pair
    num = ZSeries(numer, trunc=n)
    den = ZSeries(denom, trunc=n)
    return (num * den.recip(n)).truncate(n)


def bn_closed_form(u):
    """binom(<v,e2>,2) - sum binom(n_i,2) - sum n_i (m-i) with n_i = <u_i,e2>.

    Valid when <u_i,e2> = <u_i,e1> + 1 for all i.
    """
    m = len(u)
    ns = [v[1] for v in u]
    return comb(sum(ns), 2) - sum(comb(x, 2) for x in ns) - sum(x * (m - i) for i, x in enumerate(ns, 1))
