"""Normal-ordered polynomials in q-commuting variables (M, A) with AM = qMA.

Monomials are kept as M^i A^j; moving A^b past M^c costs q^(bc).  The
module also carries an operator model where A acts as f -> P(z,1) f(qz)
and M as multiplication by z.
"""

from dataclasses import dataclass

from .catalan import op_T_apply
from .errors import DomainError, InsufficientTruncationError, UnsupportedError
from .fps import ZSeries, zts_eval_t
from .qfield import ONE, ZERO, QRat, qr_qpow

__all__ = [
    "NormalOrdered",
    "no_mul",
    "no_pow",
    "no_substitute",
    "dual_series",
    "verify_q_equation",
    "ordering_residuals",
    "op_A",
    "op_M",
    "operator_equation_residual",
]


def _wmin(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


@dataclass(frozen=True, eq=False)
class NormalOrdered:
    """sum c_(i,j) M^i A^j, exact for M-degree <= max_m and A-degree <= max_a.

    A window bound of None means no truncation in that direction.
    """

    terms: dict
    max_m: int | None = None
    max_a: int | None = None

    def __post_init__(self):
        clean = {}
        for (i, j), c in self.terms.items():
            if i < 0 or j < 0:
                raise DomainError(f"negative degree in monomial M^{i} A^{j}")
            if (self.max_m is not None and i > self.max_m) or (self.max_a is not None and j > self.max_a):
                continue
            c = QRat.coerce(c)
            if c:
                clean[(i, j)] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def monomial(cls, i, j, coeff=ONE, max_m=None, max_a=None):
        return cls({(i, j): coeff}, max_m, max_a)

    @classmethod
    def one(cls, max_m=None, max_a=None):
        return cls({(0, 0): ONE}, max_m, max_a)

    def __getitem__(self, idx):
        if (self.max_m is not None and idx[0] > self.max_m) or (self.max_a is not None and idx[1] > self.max_a):
            raise InsufficientTruncationError(f"coefficient of M^{idx[0]} A^{idx[1]} is outside the window")
        return self.terms.get(idx, ZERO)

    def truncate(self, max_m, max_a):
        return NormalOrdered(self.terms, _wmin(self.max_m, max_m), _wmin(self.max_a, max_a))

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, ZERO) + v
        return NormalOrdered(out, _wmin(self.max_m, other.max_m), _wmin(self.max_a, other.max_a))

    def __neg__(self):
        return NormalOrdered({k: -v for k, v in self.terms.items()}, self.max_m, self.max_a)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return NormalOrdered({k: v * c for k, v in self.terms.items()}, self.max_m, self.max_a)

    def __mul__(self, other):
        if isinstance(other, NormalOrdered):
            return no_mul(self, other)
        return self.scale(QRat.coerce(other))

    __rmul__ = scale

    def __eq__(self, other):
        return (
            isinstance(other, NormalOrdered)
            and self.terms == other.terms
            and self.max_m == other.max_m
            and self.max_a == other.max_a
        )

    def __repr__(self):
        if not self.terms:
            body = "0"
        else:
            body = " + ".join(f"({c})M^{i}A^{j}" for (i, j), c in sorted(self.terms.items()))
        return f"NormalOrdered({body}; M<={self.max_m}, A<={self.max_a})"


def no_mul(x, y):
    """(M^a A^b)(M^c A^d) = q^(bc) M^(a+c) A^(b+d), extended bilinearly."""
    max_m = _wmin(x.max_m, y.max_m)
    max_a = _wmin(x.max_a, y.max_a)
    out = {}
    for (a, b), u in x.terms.items():
        for (c, d), v in y.terms.items():
            k = (a + c, b + d)
            if (max_m is not None and k[0] > max_m) or (max_a is not None and k[1] > max_a):
                continue
            term = u * v
            if b and c:
                term = term * qr_qpow(b * c)
            out[k] = out.get(k, ZERO) + term
    return NormalOrdered(out, max_m, max_a)


def no_pow(x, n):
    out = NormalOrdered.one(x.max_m, x.max_a)
    for _ in range(n):
        out = no_mul(out, x)
    return out


def no_substitute(P, T, max_m, max_a):
    """P(M, T) = sum_(i,j) P_ij M^i T^j on the window, T^j by repeated no_mul."""
    if T.terms.get((0, 0)):
        raise DomainError("substituted series must have zero constant term")
    p = P.p
    if p.trunc_z is not None and p.trunc_z < max_m:
        raise InsufficientTruncationError(f"P known only to z^{p.trunc_z}, window needs z^{max_m}")
    T = T.truncate(max_m, max_a)
    # each T^j has total degree >= j
    jmax = max_m + max_a
    if p.trunc_t is not None and p.trunc_t < jmax:
        min_a = min((j for (_, j) in T.terms), default=jmax)
        if min_a >= 1:
            jmax = max_a
        if p.trunc_t < jmax:
            raise InsufficientTruncationError(f"P known only to t^{p.trunc_t}, substitution needs t^{jmax}")
    out = NormalOrdered({}, max_m, max_a)
    power = NormalOrdered.one(max_m, max_a)
    rows = {}
    for (i, j), c in p.coeffs.items():
        if i <= max_m and j <= jmax:
            rows.setdefault(j, []).append((i, c))
    top = max(rows, default=0)
    for j in range(top + 1):
        if j:
            power = no_mul(power, T)
            if power.is_zero():
                break
        for i, c in rows.get(j, ()):
            out = out + no_mul(NormalOrdered.monomial(i, 0, c, max_m, max_a), power)
    return out


def dual_series(T, max_m, max_a):
    """sum_i T_i (M, A)^i restricted to the window."""
    if not T.covers(max_m, max_a):
        raise InsufficientTruncationError(f"dual coefficients known on {T.window}, need ({max_m}, {max_a})")
    return NormalOrdered(T.entries, max_m, max_a)


def _default_max_a(P, max_m):
    if P.t_degree_bound is None:
        raise UnsupportedError("an explicit A-window is required when Pt is not polynomial in t")
    return max_m * P.row_slope + 1


def verify_q_equation(P, T, max_m, max_a=None):
    """Residual A - P(M, sum_i T_i (M,A)^i); zero on the window when T is right."""
    if max_a is None:
        max_a = _default_max_a(P, max_m)
    series = dual_series(T, max_m, max_a)
    a = NormalOrdered.monomial(0, 1, ONE, max_m, max_a)
    return a - no_substitute(P, series, max_m, max_a)


def ordering_residuals(T, p, max_m, max_a=None):
    """Residuals of A = T - M T^p and A = T - T^p M for a given series T."""
    if max_a is None:
        max_a = max_m * (p - 1) + 1
    series = dual_series(T, max_m, max_a)
    a = NormalOrdered.monomial(0, 1, ONE, max_m, max_a)
    m = NormalOrdered.monomial(1, 0, ONE, max_m, max_a)
    tp = no_pow(series, p)
    return {
        "A = T - M T^p": a - (series - no_mul(m, tp)),
        "A = T - T^p M": a - (series - no_mul(tp, m)),
    }


# ---------------------------------------------------------- operator model


def op_A(P, f, trunc=None):
    """Af(z) = P(z, 1) f(qz)."""
    n = f.trunc if trunc is None else trunc
    if n is None:
        raise ValueError("an exact input series needs an explicit truncation")
    return (zts_eval_t(P.p, 0).truncate(n) * f.dilate(1).truncate(n)).truncate(n)


def op_M(f):
    """Mf(z) = z f(z)."""
    return f.shift(1)


def operator_equation_residual(P, T, f, trunc=None):
    """Af - P(M, T)f with T the explicit dual operator; M multiplies after T."""
    if P.t_degree_bound is None:
        raise UnsupportedError("operator equation needs P polynomial in t")
    n = f.trunc if trunc is None else trunc
    f = f.truncate(n)
    total = ZSeries({}, trunc=n)
    tf = f
    for j in range(P.t_degree_bound + 1):
        if j:
            tf = op_T_apply(P, T, tf, n)
        pj = P.p.t_slice(j)
        if pj.coeffs:
            total = total + (pj.truncate(n) * tf).truncate(n)
    return (op_A(P, f, n) - total).truncate(n)
