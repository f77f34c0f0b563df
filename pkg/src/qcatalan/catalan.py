"""Catalan power series, q-Catalan bases and dual coefficients.

A Catalan power series is ``P(z, t) = t - z * Pt(z, t) * t**2``.  Its
normalized q-Catalan basis ``(e_k)`` satisfies
``e_k(qz) P(z, 1) = e_k(z) P(z, q^k)`` with ``[z^k] e_k = 1``, and its dual
coefficients ``T_i`` are the unique array with ``sum_i T_i et_i(z, t) = t``,
where ``et_i(z, t) = z^i1 prod_{j < i2} P(q^j z, t)`` is the predual basis.

Dual coefficients are computed two independent ways: the abstract Segner
recursion (:func:`dual_coeffs_segner`) and a unitriangular solve in the
predual basis (:func:`dual_coeffs_triangular`).
"""

from dataclasses import dataclass, field

from .errors import DomainError, InsufficientTruncationError, UnsupportedError
from .fps import ZSeries, ZTSeries, zts_eval_t
from .qfield import ONE, ZERO, qr_qpow

__all__ = [
    "CatalanSeries",
    "DualCoeffs",
    "catalan_from_ptilde",
    "catalan_from_phi",
    "basis_element",
    "predual",
    "PredualTable",
    "bn",
    "staircase_order",
    "dual_coeffs_segner",
    "dual_coeffs_triangular",
    "delta_p",
    "delta_p_table",
    "op_T_apply",
    "op_T_power",
    "dual_form",
    "pi2",
    "predual_combination",
]


@dataclass(frozen=True, eq=False)
class CatalanSeries:
    """The pair (P, Pt) with P = t - z Pt t^2.

    ``t_degree_bound`` is the t-degree of P when P is a polynomial in t
    (Pt fully resolved in both variables), else None.
    """

    ptilde: ZTSeries
    p: ZTSeries
    t_degree_bound: int | None = None

    @property
    def row_slope(self):
        """Max t-degree of R = Pt * t; T_(m, j) vanishes for j > m * slope + 1."""
        if self.t_degree_bound is None:
            raise UnsupportedError("Pt is not a polynomial in t")
        return max(self.t_degree_bound - 1, 0)

    def p_at_t(self, a):
        """P(z, q^a) as a series in z."""
        return zts_eval_t(self.p, a)

    def __repr__(self):
        return f"CatalanSeries(ptilde={self.ptilde!r})"


def catalan_from_ptilde(ptilde):
    if not isinstance(ptilde, ZTSeries):
        ptilde = ZTSeries({(0, 0): ptilde})
    p = ZTSeries.monomial(0, 1) - ptilde.shift(1, 2)
    bound = None
    if ptilde.trunc_z is None and ptilde.trunc_t is None:
        bound = max(p.max_t_degree(), 1)
    return CatalanSeries(ptilde, p, bound)


def catalan_from_phi(phi, p):
    """P(z, t) = t - t phi(t^(p-1) z) for phi of order >= 1."""
    if p < 2:
        raise DomainError(f"p must be at least 2, got {p}")
    order = phi.order()
    if order is not None and order < 1:
        raise DomainError("phi must have order at least 1")
    coeffs = {(i - 1, (p - 1) * i - 1): c for i, c in phi.coeffs.items()}
    tz = None if phi.trunc is None else phi.trunc - 1
    return catalan_from_ptilde(ZTSeries(coeffs, trunc_z=tz, trunc_t=None))


# ------------------------------------------------------------------ basis


def basis_element(P, k, trunc):
    """Normalized e_k to z^trunc via the dilation recurrence.

    With P(z, q^k)/P(z, 1) = q^k (1 + sum_{c>=1} r_c z^c), matching the
    coefficient of z^m in e(qz) = e(z) * ratio gives
    (q^m - q^k) e_m = q^k sum_{c>=1} r_c e_{m-c}.
    """
    if trunc < k:
        return ZSeries({}, trunc=trunc)
    depth = trunc - k
    z = ZSeries.monomial(1)
    # P(z, t) = t (1 - z t Pt(z, t))
    pt_k = zts_eval_t(P.ptilde, k)
    pt_1 = zts_eval_t(P.ptilde, 0)
    num = (ZSeries.one() - (z * pt_k).scale(qr_qpow(k))).truncate(depth)
    den = (ZSeries.one() - z * pt_1).truncate(depth)
    if num.trunc is not None and num.trunc < depth or den.trunc is not None and den.trunc < depth:
        raise InsufficientTruncationError(f"Pt known only to z^{P.ptilde.trunc_z}; e_{k} to z^{trunc} needs z^{depth - 1}")
    ratio = num * den.recip(depth)
    r = [ratio[c] for c in range(depth + 1)]
    qk = qr_qpow(k)
    e = [ONE] + [ZERO] * depth
    for m in range(1, depth + 1):
        acc = ZERO
        for c in range(1, m + 1):
            if r[c] and e[m - c]:
                acc = acc + r[c] * e[m - c]
        if acc:
            e[m] = qk * acc / (qr_qpow(k + m) - qk)
    return ZSeries({k + m: v for m, v in enumerate(e)}, trunc=trunc)


class PredualTable:
    """Cache of prod_{j<n} P(q^j z, t) on a fixed (z, t) window."""

    def __init__(self, P, trunc_z, trunc_t):
        self.P = P
        self.trunc_z = trunc_z
        self.trunc_t = trunc_t
        self._prods = [ZTSeries.one(trunc_z, trunc_t)]

    def product(self, n):
        while len(self._prods) <= n:
            j = len(self._prods) - 1
            factor = self.P.p.subst_z_scaled(j).truncate(self.trunc_z, self.trunc_t)
            self._prods.append((self._prods[-1] * factor).truncate(self.trunc_z, self.trunc_t))
        return self._prods[n]

    def __call__(self, i):
        i1, i2 = i
        return self.product(i2).shift(i1).truncate(self.trunc_z, self.trunc_t)


def predual(P, i, trunc_z, trunc_t):
    """et_i(z, t) = z^i1 prod_{0<=j<i2} P(q^j z, t) on the given window."""
    return PredualTable(P, trunc_z, trunc_t)(i)


def predual_combination(P, coeffs, trunc_z, trunc_t, table=None):
    """sum_i c_i et_i(z, t) on the given window."""
    table = table or PredualTable(P, trunc_z, trunc_t)
    out = ZTSeries({}, trunc_z, trunc_t)
    for i, c in coeffs.items():
        if c and i[0] <= trunc_z and i[1] <= trunc_t:
            out = out + table(i).scale(c)
    return out


def bn(u):
    """B_n(u_1..u_n) = sum_{i<j} <u_i, e2> <u_j, e1>; zero for n <= 1."""
    total = 0
    prefix_t = 0
    for v in u:
        total += prefix_t * v[0]
        prefix_t += v[1]
    return total


def staircase_order(max_1, max_2):
    """Indices of [0, max_1] x [0, max_2] in the shell-by-shell snake order.

    Shell s = max(i1, i2); within a shell, first the row (x, s) for x < s,
    then the column (s, y) for y <= s.  Every i with i < j componentwise
    comes before j.
    """
    for s in range(max(max_1, max_2) + 1):
        if s <= max_2:
            for x in range(min(s, max_1 + 1)):
                yield (x, s)
        if s <= max_1:
            for y in range(min(s, max_2) + 1):
                yield (s, y)


# ------------------------------------------------------ dual coefficients


@dataclass
class DualCoeffs:
    """Exact dual coefficients T_i for i in [0, max_r1] x [0, max_r2]."""

    entries: dict
    window: tuple
    method: str
    extra: dict = field(default_factory=dict)

    def __getitem__(self, i):
        if i[0] > self.window[0] or i[1] > self.window[1]:
            raise InsufficientTruncationError(f"T_{i} outside computed window {self.window}")
        return self.entries.get(i, ZERO)

    def nonzero(self):
        return sorted(self.entries)

    def restrict(self, max_r1, max_r2):
        return DualCoeffs(
            {i: c for i, c in self.entries.items() if i[0] <= max_r1 and i[1] <= max_r2},
            (min(max_r1, self.window[0]), min(max_r2, self.window[1])),
            self.method,
        )

    def mismatches(self, other):
        """Indices on the common window where the two arrays differ."""
        w1 = min(self.window[0], other.window[0])
        w2 = min(self.window[1], other.window[1])
        keys = {i for i in self.entries if i[0] <= w1 and i[1] <= w2}
        keys |= {i for i in other.entries if i[0] <= w1 and i[1] <= w2}
        return sorted(i for i in keys if self.entries.get(i, ZERO) != other.entries.get(i, ZERO))

    def covers(self, max_r1, max_r2):
        return self.window[0] >= max_r1 and self.window[1] >= max_r2


def _r_coefficients(P, max_i, max_j):
    pt = P.ptilde
    if pt.trunc_z is not None and pt.trunc_z < max_i:
        raise InsufficientTruncationError(f"R_({max_i}, .) needed but Pt known only to z^{pt.trunc_z}")
    if pt.trunc_t is not None and pt.trunc_t < max_j - 1:
        raise InsufficientTruncationError(f"R_(., {max_j}) needed but Pt known only to t^{pt.trunc_t}")
    return sorted((i, j + 1, c) for (i, j), c in pt.coeffs.items() if i <= max_i and j + 1 <= max_j)


def dual_coeffs_segner(P, max_r1, max_r2):
    """Dual coefficients from the abstract q-Segner recursion.

    T_r = [r = (0,1)] + sum_{i,j} R_{i,j} W_{j+1}[r - (i+1, 0)], where
    W_n[k] = sum_{k_1+..+k_n = k} T_{k_1}..T_{k_n} q^{B_n(k_1..k_n)}.
    Layer m (first coordinate) of T only needs layers < m of the W_n, and
    W_n is built from W_{n-1} and T through the twist
    B_n = B_{n-1} + <k_1+..+k_{n-1}, e2> <k_n, e1>.
    """
    rs = _r_coefficients(P, max_r1 - 1, max_r2 - 1)
    nmax = max((j + 1 for _, j, _ in rs), default=0)
    # layers[n][m] = {a2: value} holds W_n at first coordinate m; layers[1] is T itself
    layers = {n: [] for n in range(1, nmax + 2)}
    t_layers = layers[1]
    for m in range(max_r1 + 1):
        row = {}
        if m == 0:
            if max_r2 >= 1:
                row[1] = ONE
        else:
            for i, j, c in rs:
                src_m = m - i - 1
                if src_m < 0:
                    continue
                for a2, v in layers[j + 1][src_m].items():
                    row[a2] = row.get(a2, ZERO) + c * v
        t_layers.append({a2: v for a2, v in row.items() if v})
        for n in range(2, nmax + 1):
            prev = layers[n - 1]
            new = {}
            for a in range(m + 1):
                b1 = m - a
                for x, vx in prev[a].items():
                    for y, vy in t_layers[b1].items():
                        s = x + y
                        if s > max_r2:
                            continue
                        term = vx * vy
                        if b1 and x:
                            term = term * qr_qpow(x * b1)
                        new[s] = new.get(s, ZERO) + term
            layers[n].append({k: v for k, v in new.items() if v})
    entries = {(m, a2): v for m, row in enumerate(t_layers) for a2, v in row.items()}
    return DualCoeffs(entries, (max_r1, max_r2), "segner")


def dual_coeffs_triangular(P, trunc_z, trunc_t):
    """Dual coefficients by solving sum_i T_i et_i(z, t) = t directly.

    et_i = (z, t)^i (1 + f_i) with f_i(0, 0) = 0, so in the staircase order
    T_j equals the coefficient of z^j1 t^j2 in what remains of t after
    subtracting the already-determined terms.
    """
    if P.p.trunc_z is not None and P.p.trunc_z < trunc_z:
        raise InsufficientTruncationError(f"P known only to z^{P.p.trunc_z}, window needs z^{trunc_z}")
    if P.p.trunc_t is not None and P.p.trunc_t < trunc_t:
        raise InsufficientTruncationError(f"P known only to t^{P.p.trunc_t}, window needs t^{trunc_t}")
    table = PredualTable(P, trunc_z, trunc_t)
    residual = {(0, 1): ONE} if trunc_t >= 1 else {}
    entries = {}
    for idx in staircase_order(trunc_z, trunc_t):
        c = residual.get(idx)
        if not c:
            continue
        entries[idx] = c
        i1, i2 = idx
        for (a, b), v in table.product(i2).coeffs.items():
            key = (a + i1, b)
            if key[0] > trunc_z or key[1] > trunc_t:
                continue
            nv = residual.get(key, ZERO) - c * v
            if nv:
                residual[key] = nv
            else:
                residual.pop(key, None)
    return DualCoeffs(entries, (trunc_z, trunc_t), "triangular")


# --------------------------------------------------------------- operators


def delta_p_table(P):
    """Divided difference (P(z,s) - P(z,t))/(s - t) as {(a, b): c(z)} for s^a t^b."""
    if P.t_degree_bound is None:
        raise UnsupportedError("divided difference needs P polynomial in t")
    out = {}
    for j in range(1, P.t_degree_bound + 1):
        pj = P.p.t_slice(j)
        if not pj.coeffs:
            continue
        for a in range(j):
            key = (a, j - 1 - a)
            out[key] = out[key] + pj if key in out else pj
    return {k: v for k, v in out.items() if v.coeffs}


def delta_p(P, n):
    """Coefficients c_a(z) with DeltaP(z, s, q^n) = sum_a c_a(z) s^a."""
    out = {}
    for (a, b), c in delta_p_table(P).items():
        term = c.scale(qr_qpow(n * b)) if b else c
        out[a] = out[a] + term if a in out else term
    return {a: v for a, v in out.items() if v.coeffs}


def _check_window(P, T, N, extra_factors=1):
    slope = P.row_slope
    need = (N, N * slope + extra_factors)
    if not T.covers(N, N * slope + 1):
        raise InsufficientTruncationError(
            f"dual coefficients known on {T.window}; applying T to z^{N} needs ({need[0]}, {N * slope + 1})"
        )


class _PredualAtOne:
    """prod_{j<n} P(q^j z, 1) as z-series, truncated at N."""

    def __init__(self, P, N):
        self.P = P
        self.N = N
        self._prods = [ZSeries.one(N)]
        self._p1 = zts_eval_t(P.p, 0).truncate(N)

    def __getitem__(self, n):
        while len(self._prods) <= n:
            j = len(self._prods) - 1
            self._prods.append((self._prods[-1] * self._p1.dilate(j)).truncate(self.N))
        return self._prods[n]


def _resolve_trunc(f, trunc):
    N = f.trunc if trunc is None else trunc
    if N is None:
        raise ValueError("an exact input series needs an explicit truncation")
    if f.trunc is not None and f.trunc < N:
        raise InsufficientTruncationError(f"f known only to z^{f.trunc}, need z^{N}")
    return N


def _apply_weighted(P, weights, f, N, at_one):
    by_row = {}
    for (i1, i2), c in weights.items():
        if i1 <= N and c:
            by_row.setdefault(i2, []).append((i1, c))
    out = ZSeries({}, trunc=N)
    for i2, items in by_row.items():
        base = (at_one[i2] * f.dilate(i2).truncate(N)).truncate(N)
        for i1, c in items:
            out = out + base.shift(i1).truncate(N).scale(c)
    return out.truncate(N)


def op_T_apply(P, T, f, trunc=None):
    """Tf(z) = sum_i T_i et_i(z, 1) f(q^i2 z), to z^trunc."""
    if P.t_degree_bound is None:
        raise UnsupportedError("Tf has no exact meaning unless Pt is polynomial in t")
    N = _resolve_trunc(f, trunc)
    _check_window(P, T, N)
    return _apply_weighted(P, T.entries, f, N, _PredualAtOne(P, N))


def _twisted_power(entries, n, max_1, max_2):
    """W_n[k] = sum_{k_1+..+k_n = k} prod T_{k_i} q^{B_n(k_1..k_n)} on a window."""
    w = {(0, 0): ONE}
    for _ in range(n):
        nxt = {}
        for (a1, a2), va in w.items():
            for (b1, b2), vb in entries.items():
                k = (a1 + b1, a2 + b2)
                if k[0] > max_1 or k[1] > max_2:
                    continue
                term = va * vb
                if a2 and b1:
                    term = term * qr_qpow(a2 * b1)
                nxt[k] = nxt.get(k, ZERO) + term
        w = {k: v for k, v in nxt.items() if v}
    return w


def op_T_power(P, T, n, f, trunc=None):
    """T^n f by the closed multi-index formula with exponents B_n."""
    if P.t_degree_bound is None:
        raise UnsupportedError("Tf has no exact meaning unless Pt is polynomial in t")
    if n < 0:
        raise DomainError("power must be nonnegative")
    N = _resolve_trunc(f, trunc)
    if n == 0:
        return f.truncate(N)
    _check_window(P, T, N)
    slope = P.row_slope
    w = _twisted_power(T.entries, n, N, N * slope + n)
    return _apply_weighted(P, w, f, N, _PredualAtOne(P, N))


def dual_form(P, T, n, f, basis=None):
    """[e_n] f = q^n [z^0] ( DeltaP(z, T, q^n) f(z) / (e_n(qz) P(z, 1)) )."""
    if P.t_degree_bound is None:
        raise UnsupportedError("dual forms need P polynomial in t")
    N = n
    f = f.truncate(N) if f.trunc is None or f.trunc >= N else f
    if f.trunc is not None and f.trunc < N:
        raise InsufficientTruncationError(f"f known only to z^{f.trunc}, [e_{n}] needs z^{N}")
    f = f.truncate(N)
    coeffs = delta_p(P, n)
    powers = [f]
    for _ in range(max(coeffs, default=0)):
        powers.append(op_T_apply(P, T, powers[-1], N))
    numer = ZSeries({}, trunc=N)
    for a, c in coeffs.items():
        numer = numer + (c.truncate(N) * powers[a]).truncate(N)
    e_n = basis if basis is not None else basis_element(P, n, 2 * n)
    denom = (e_n.truncate(2 * n).dilate(1) * zts_eval_t(P.p, 0).truncate(2 * n)).truncate(2 * n)
    quotient = numer * denom.recip()
    return qr_qpow(n) * quotient[0]


def pi2(P, f, g, trunc_z, trunc_t, table=None):
    """Pi_2(f, g) = sum_{i,j} f_i g_j et_i(z, t) et_j(q^{i2} z, t).

    ``f`` and ``g`` are coefficient maps on the predual basis.
    """
    table = table or PredualTable(P, trunc_z, trunc_t)
    out = ZTSeries({}, trunc_z, trunc_t)
    for i, fi in f.items():
        if not fi:
            continue
        left = table(i)
        for j, gj in g.items():
            if not gj or i[0] + j[0] > trunc_z or i[1] + j[1] > trunc_t:
                continue
            right = table(j).subst_z_scaled(i[1])
            out = out + (left * right).truncate(trunc_z, trunc_t).scale(fi * gj)
    return out
