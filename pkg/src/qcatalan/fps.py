"""Truncated power/Laurent series in z and bivariate series in (z, t) over QRat.

Every series carries an inclusive truncation order: coefficients of degree
above it are *unknown*, not zero.  ``None`` means the series is known
exactly (finitely many nonzero terms, or, for the t-direction of a
:class:`ZTSeries`, complete in t for every z-degree inside the z-window).
Combining two series always yields the window on which the result is
provably exact.
"""

from .errors import InsufficientTruncationError, NotInvertibleError, TIncompleteError
from .qfield import ONE, ZERO, QRat, as_qexp, qr_qpow

__all__ = [
    "ZSeries",
    "ZTSeries",
    "zs_mul",
    "zs_recip",
    "zs_dilate",
    "pochhammer",
    "zts_eval_t",
    "zts_subst_z_scaled",
]

_INF = float("inf")


def _w(trunc):
    return _INF if trunc is None else trunc


def _unw(x):
    return None if x == _INF else int(x)


def _tmin(*truncs):
    return _unw(min(_w(t) for t in truncs))


def _scalar(c):
    c = QRat.coerce(c)
    if c is NotImplemented:
        raise TypeError("series coefficients must be QRat, int or Fraction")
    return c


class ZSeries:
    """A truncated series sum_{low <= d <= trunc} c_d z^d."""

    __slots__ = ("coeffs", "low", "trunc")

    def __init__(self, coeffs=None, trunc=None, low=0):
        self.low = low
        self.trunc = trunc
        clean = {}
        for d, c in (coeffs or {}).items():
            if d < low:
                raise ValueError(f"degree {d} below declared low {low}")
            if trunc is not None and d > trunc:
                continue
            c = _scalar(c)
            if c:
                clean[d] = c
        self.coeffs = clean

    @classmethod
    def _raw(cls, coeffs, trunc, low=0):
        obj = cls.__new__(cls)
        obj.coeffs, obj.trunc, obj.low = coeffs, trunc, low
        return obj

    @classmethod
    def from_list(cls, values, trunc=None, low=0):
        return cls({low + i: v for i, v in enumerate(values)}, trunc=trunc, low=low)

    @classmethod
    def one(cls, trunc=None):
        return cls._raw({0: ONE}, trunc)

    @classmethod
    def monomial(cls, d, c=1, trunc=None):
        return cls({d: c}, trunc=trunc, low=min(d, 0))

    # ---------------------------------------------------------------- access

    def __getitem__(self, d):
        if self.trunc is not None and d > self.trunc:
            raise InsufficientTruncationError(f"[z^{d}] requested but series known only to z^{self.trunc}")
        return self.coeffs.get(d, ZERO)

    def order(self):
        """Least degree with a nonzero coefficient, or None if zero on the window."""
        return min(self.coeffs) if self.coeffs else None

    def _ord_bound(self):
        if self.coeffs:
            return min(self.coeffs)
        return _w(self.trunc) + 1

    def degree(self):
        return max(self.coeffs) if self.coeffs else None

    def truncate(self, n):
        t = _tmin(self.trunc, n)
        return ZSeries._raw({d: c for d, c in self.coeffs.items() if d <= t}, t, self.low)

    def with_trunc(self, n):
        """Declare a finite truncation (only narrows the window)."""
        return self.truncate(n)

    def map_coeffs(self, fn):
        out = {}
        for d, c in self.coeffs.items():
            v = fn(d, c)
            if v:
                out[d] = v
        return ZSeries._raw(out, self.trunc, self.low)

    def agrees(self, other, upto):
        """Coefficientwise equality for degrees <= ``upto`` (both must be known there)."""
        for s in (self, other):
            if s.trunc is not None and s.trunc < upto:
                raise InsufficientTruncationError(f"series known only to z^{s.trunc}, need z^{upto}")
        keys = {d for d in self.coeffs if d <= upto} | {d for d in other.coeffs if d <= upto}
        return all(self.coeffs.get(d, ZERO) == other.coeffs.get(d, ZERO) for d in keys)

    # ------------------------------------------------------------ arithmetic

    def __add__(self, other):
        if not isinstance(other, ZSeries):
            other = ZSeries({0: _scalar(other)})
        t = _tmin(self.trunc, other.trunc)
        out = {d: c for d, c in self.coeffs.items() if t is None or d <= t}
        for d, c in other.coeffs.items():
            if t is not None and d > t:
                continue
            v = out.get(d, ZERO) + c
            if v:
                out[d] = v
            else:
                out.pop(d, None)
        return ZSeries._raw(out, t, min(self.low, other.low))

    __radd__ = __add__

    def __neg__(self):
        return ZSeries._raw({d: -c for d, c in self.coeffs.items()}, self.trunc, self.low)

    def __sub__(self, other):
        if not isinstance(other, ZSeries):
            other = ZSeries({0: _scalar(other)})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = _scalar(c)
        if not c:
            return ZSeries._raw({}, self.trunc, self.low)
        return ZSeries._raw({d: v * c for d, v in self.coeffs.items()}, self.trunc, self.low)

    def __mul__(self, other):
        if isinstance(other, ZSeries):
            return zs_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, other):
        if isinstance(other, ZSeries):
            return zs_mul(self, zs_recip(other, trunc=_tmin(self.trunc, other.trunc)))
        return self.scale(ONE / _scalar(other))

    def __pow__(self, n):
        out = ZSeries.one()
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k):
        """Multiply by z^k."""
        t = None if self.trunc is None else self.trunc + k
        return ZSeries._raw({d + k: c for d, c in self.coeffs.items()}, t, self.low + k)

    def dilate(self, a):
        return zs_dilate(self, a)

    def recip(self, trunc=None):
        return zs_recip(self, trunc)

    def subs_power(self, k):
        """f(z^k); the window grows to just below the first unknown degree."""
        t = None if self.trunc is None else (self.trunc + 1) * k - 1
        return ZSeries._raw({d * k: c for d, c in self.coeffs.items()}, t, self.low * k)

    def subst_inverse_q(self):
        return self.map_coeffs(lambda d, c: c.subst_inverse_q())

    # ------------------------------------------------------------ comparison

    def __eq__(self, other):
        if not isinstance(other, ZSeries):
            return NotImplemented
        return self.trunc == other.trunc and self.coeffs == other.coeffs

    __hash__ = None

    def __repr__(self):
        return f"ZSeries({self.to_str()})"

    def to_str(self, var="z"):
        terms = []
        for d in sorted(self.coeffs):
            c = self.coeffs[d]
            mono = "" if d == 0 else (var if d == 1 else f"{var}^{d}")
            if mono:
                terms.append(f"({c}){mono}" if c != 1 else mono)
            else:
                terms.append(f"({c})")
        body = " + ".join(terms) if terms else "0"
        if self.trunc is not None:
            body += f" + O({var}^{self.trunc + 1})"
        return body


def zs_mul(f, g):
    """Product truncated to the window on which it is exact."""
    t = _unw(min(_w(f.trunc) + g._ord_bound(), _w(g.trunc) + f._ord_bound()))
    out = {}
    gitems = sorted(g.coeffs.items())
    for a, ca in f.coeffs.items():
        for b, cb in gitems:
            d = a + b
            if t is not None and d > t:
                break
            v = out.get(d)
            out[d] = ca * cb if v is None else v + ca * cb
    return ZSeries._raw({d: c for d, c in out.items() if c}, t, f.low + g.low)


def zs_recip(f, trunc=None):
    """1/f as a Laurent series with low = -order(f).

    When ``f`` is exact its reciprocal is still an infinite series, so a
    target ``trunc`` is required.
    """
    d = f.order()
    if d is None:
        raise NotInvertibleError("reciprocal of a series that is zero on its window")
    lead = f.coeffs[d]
    t = _tmin(None if f.trunc is None else f.trunc - 2 * d, trunc)
    if t is None:
        raise ValueError("reciprocal of an exact series needs a target truncation")
    inv_lead = ONE / lead
    u = {k - d: c for k, c in f.coeffs.items()}
    n_max = t + d
    v = [ZERO] * (n_max + 1)
    if n_max >= 0:
        v[0] = inv_lead
    uitems = sorted((k, c) for k, c in u.items() if k >= 1)
    for n in range(1, n_max + 1):
        acc = ZERO
        for k, c in uitems:
            if k > n:
                break
            if v[n - k]:
                acc = acc + c * v[n - k]
        v[n] = -(acc * inv_lead) if acc else ZERO
    out = {n - d: v[n] for n in range(n_max + 1) if v[n]}
    return ZSeries._raw(out, t, -d)


def zs_dilate(f, a):
    """f(q^a z): the coefficient of z^d is multiplied by q^(a*d)."""
    a = as_qexp(a)
    if a == 0:
        return f
    return ZSeries._raw({d: c * qr_qpow(a * d) for d, c in f.coeffs.items()}, f.trunc, f.low)


def pochhammer(n, trunc=None, base=1):
    """(z; b)_n = prod_{0<=j<n} (1 - z b^j) with b = q^base."""
    base = as_qexp(base)
    out = ZSeries.one(trunc)
    for j in range(n):
        out = out * ZSeries({0: ONE, 1: -qr_qpow(base * j)})
    return out.truncate(trunc) if trunc is not None else out


class ZTSeries:
    """A truncated bivariate series sum c_{i,j} z^i t^j.

    ``trunc_t = None`` means every coefficient with z-degree inside the
    z-window is stored (the series is complete in t on that window).
    """

    __slots__ = ("coeffs", "trunc_z", "trunc_t")

    def __init__(self, coeffs=None, trunc_z=None, trunc_t=None):
        self.trunc_z = trunc_z
        self.trunc_t = trunc_t
        clean = {}
        for (i, j), c in (coeffs or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative bidegree {(i, j)}")
            if (trunc_z is not None and i > trunc_z) or (trunc_t is not None and j > trunc_t):
                continue
            c = _scalar(c)
            if c:
                clean[(i, j)] = c
        self.coeffs = clean

    @classmethod
    def _raw(cls, coeffs, trunc_z, trunc_t):
        obj = cls.__new__(cls)
        obj.coeffs, obj.trunc_z, obj.trunc_t = coeffs, trunc_z, trunc_t
        return obj

    @classmethod
    def one(cls, trunc_z=None, trunc_t=None):
        return cls._raw({(0, 0): ONE}, trunc_z, trunc_t)

    @classmethod
    def monomial(cls, i, j, c=1, trunc_z=None, trunc_t=None):
        return cls({(i, j): c}, trunc_z, trunc_t)

    def __getitem__(self, ij):
        i, j = ij
        if (self.trunc_z is not None and i > self.trunc_z) or (self.trunc_t is not None and j > self.trunc_t):
            raise InsufficientTruncationError(f"[z^{i} t^{j}] outside known window ({self.trunc_z}, {self.trunc_t})")
        return self.coeffs.get((i, j), ZERO)

    def _ord_bounds(self):
        if self.coeffs:
            return min(i for i, _ in self.coeffs), min(j for _, j in self.coeffs)
        return _w(self.trunc_z) + 1, _w(self.trunc_t) + 1

    def max_t_degree(self):
        return max((j for _, j in self.coeffs), default=-1)

    def max_z_degree(self):
        return max((i for i, _ in self.coeffs), default=-1)

    def truncate(self, trunc_z=None, trunc_t=None):
        tz, tt = _tmin(self.trunc_z, trunc_z), _tmin(self.trunc_t, trunc_t)
        out = {
            k: c
            for k, c in self.coeffs.items()
            if (tz is None or k[0] <= tz) and (tt is None or k[1] <= tt)
        }
        return ZTSeries._raw(out, tz, tt)

    def t_slice(self, j):
        """[t^j] as a ZSeries in z."""
        if self.trunc_t is not None and j > self.trunc_t:
            raise InsufficientTruncationError(f"t^{j} outside known t-window {self.trunc_t}")
        return ZSeries._raw({i: c for (i, jj), c in self.coeffs.items() if jj == j}, self.trunc_z)

    def z_slice(self, i):
        """[z^i] as a ZSeries in t."""
        return ZSeries._raw({j: c for (ii, j), c in self.coeffs.items() if ii == i}, self.trunc_t)

    def __add__(self, other):
        if not isinstance(other, ZTSeries):
            other = ZTSeries({(0, 0): _scalar(other)})
        tz, tt = _tmin(self.trunc_z, other.trunc_z), _tmin(self.trunc_t, other.trunc_t)
        out = {}
        for src in (self.coeffs, other.coeffs):
            for k, c in src.items():
                if (tz is not None and k[0] > tz) or (tt is not None and k[1] > tt):
                    continue
                v = out.get(k)
                out[k] = c if v is None else v + c
        return ZTSeries._raw({k: c for k, c in out.items() if c}, tz, tt)

    __radd__ = __add__

    def __neg__(self):
        return ZTSeries._raw({k: -c for k, c in self.coeffs.items()}, self.trunc_z, self.trunc_t)

    def __sub__(self, other):
        if not isinstance(other, ZTSeries):
            other = ZTSeries({(0, 0): _scalar(other)})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = _scalar(c)
        return ZTSeries._raw({k: v * c for k, v in self.coeffs.items()} if c else {}, self.trunc_z, self.trunc_t)

    def __mul__(self, other):
        if not isinstance(other, ZTSeries):
            return self.scale(other)
        fz, ft = self._ord_bounds()
        gz, gt = other._ord_bounds()
        tz = _unw(min(_w(self.trunc_z) + gz, _w(other.trunc_z) + fz))
        tt = _unw(min(_w(self.trunc_t) + gt, _w(other.trunc_t) + ft))
        out = {}
        gitems = list(other.coeffs.items())
        for (a, b), ca in self.coeffs.items():
            for (c, d), cb in gitems:
                i, j = a + c, b + d
                if (tz is not None and i > tz) or (tt is not None and j > tt):
                    continue
                v = out.get((i, j))
                out[(i, j)] = ca * cb if v is None else v + ca * cb
        return ZTSeries._raw({k: c for k, c in out.items() if c}, tz, tt)

    def __rmul__(self, other):
        return self.scale(other)

    def shift(self, di, dj=0):
        """Multiply by z^di t^dj."""
        tz = None if self.trunc_z is None else self.trunc_z + di
        tt = None if self.trunc_t is None else self.trunc_t + dj
        return ZTSeries._raw({(i + di, j + dj): c for (i, j), c in self.coeffs.items()}, tz, tt)

    def subst_z_scaled(self, a):
        return zts_subst_z_scaled(self, a)

    def eval_t(self, a, strict=True):
        return zts_eval_t(self, a, strict)

    def agrees(self, other, upto_z, upto_t):
        keys = {k for k in self.coeffs if k[0] <= upto_z and k[1] <= upto_t}
        keys |= {k for k in other.coeffs if k[0] <= upto_z and k[1] <= upto_t}
        for s in (self, other):
            if (s.trunc_z is not None and s.trunc_z < upto_z) or (s.trunc_t is not None and s.trunc_t < upto_t):
                raise InsufficientTruncationError("comparison window exceeds known window")
        return all(self.coeffs.get(k, ZERO) == other.coeffs.get(k, ZERO) for k in keys)

    def __eq__(self, other):
        if not isinstance(other, ZTSeries):
            return NotImplemented
        return (self.trunc_z, self.trunc_t) == (other.trunc_z, other.trunc_t) and self.coeffs == other.coeffs

    __hash__ = None

    def __repr__(self):
        terms = []
        for (i, j) in sorted(self.coeffs):
            c = self.coeffs[(i, j)]
            mono = "".join(
                s for s in ((f"z^{i}" if i > 1 else "z" if i else ""), (f"t^{j}" if j > 1 else "t" if j else ""))
            )
            terms.append(f"({c}){mono}")
        return f"ZTSeries({' + '.join(terms) or '0'}; window=({self.trunc_z}, {self.trunc_t}))"


def zts_eval_t(F, a, strict=True):
    """Collapse t = q^a.  Raises TIncompleteError when F is not complete in t,
    unless ``strict`` is False."""
    if F.trunc_t is not None and strict:
        raise TIncompleteError(
            f"evaluation at t = q^{a} needs all t-degrees but the series is known only to t^{F.trunc_t}"
        )
    a = as_qexp(a)
    out = {}
    for (i, j), c in F.coeffs.items():
        v = c if (a == 0 or j == 0) else c * qr_qpow(a * j)
        prev = out.get(i)
        out[i] = v if prev is None else prev + v
    return ZSeries._raw({i: c for i, c in out.items() if c}, F.trunc_z)


def zts_subst_z_scaled(F, a):
    """F(q^a z, t)."""
    a = as_qexp(a)
    if a == 0:
        return F
    return ZTSeries._raw(
        {(i, j): c * qr_qpow(a * i) if i else c for (i, j), c in F.coeffs.items()}, F.trunc_z, F.trunc_t
    )

