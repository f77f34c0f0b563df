"""Named verification suites: each returns a list of (name, passed) checks."""

import random
from dataclasses import dataclass

from .catalan import (
    basis_element,
    bn,
    catalan_from_ptilde,
    dual_coeffs_segner,
    dual_coeffs_triangular,
    dual_form,
    op_T_apply,
    op_T_power,
    pi2,
    PredualTable,
    predual_combination,
)
from .expr import lower_zseries, lower_ztseries
from .fps import ZSeries, ZTSeries, zts_eval_t
from .fuss import (
    carlitz,
    fuss_catalan,
    q_airy,
    qfuss,
    qfuss_via_basis,
    rogers_ramanujan_cfrac,
)
from .pary import (
    PAryContext,
    bn_closed_form,
    diamond,
    tgen_from_dual,
    tgen_functional,
    tgen_ratio,
    theta_constant_term,
    u_apply,
)
from .qfield import ONE, ZERO, QRat, qr_qpow
from .qweyl import NormalOrdered, no_mul, verify_q_equation

__all__ = ["Check", "SUITES", "run_suite", "random_ptilde", "random_series", "PTILDE_FAMILY", "P_FAMILY", "PHI_FAMILY"]

PTILDE_FAMILY = ("0", "1", "t", "1+t", "1+z", "1+z+t^2")
# Pt for P in {t, t - z t^2, t - z t^3, t - z (1+t) t^2}
P_FAMILY = ("0", "1", "t", "1+t")
PHI_FAMILY = ("z", "z+z^2", "z-2*z^2+z^3")


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


def random_ptilde(rng, zdeg=3, tdeg=3, bound=3):
    coeffs = {}
    for i in range(zdeg + 1):
        for j in range(tdeg + 1):
            c = rng.randint(-bound, bound)
            if c:
                coeffs[(i, j)] = QRat.coerce(c)
    return ZTSeries(coeffs)


def random_series(rng, trunc, bound=3):
    return ZSeries({d: QRat.coerce(rng.randint(-bound, bound)) for d in range(trunc + 1)}, trunc=trunc)


def _catalan(text):
    return catalan_from_ptilde(lower_ztseries(text))


def _full_dual(P, n):
    return dual_coeffs_segner(P, n, n * P.row_slope + 1)


def suite_carlitz(order, **_):
    table = carlitz(order)
    checks = []
    for r in range(1, order + 1):
        acc = ZERO
        for i in range(r):
            acc = acc + table[i] * table[r - 1 - i] * qr_qpow((r - 1 - i) * (i + 1))
        checks.append(Check(f"recursion C_{r}", acc == table[r]))
    q1 = table.at_q1()
    catalan_numbers = [fuss_catalan(2, n) for n in range(order + 1)]
    checks.append(Check("q=1 gives Catalan numbers", q1 == catalan_numbers))
    return checks


def suite_cross_method(order, seed, r2=None, **_):
    r2 = r2 if r2 is not None else order + 4
    rng = random.Random(seed)
    cases = [(f"Pt={s}", lower_ztseries(s)) for s in PTILDE_FAMILY]
    cases += [(f"random Pt #{k}", random_ptilde(rng)) for k in range(3)]
    checks = []
    for name, pt in cases:
        P = catalan_from_ptilde(pt)
        a = dual_coeffs_segner(P, order, r2)
        b = dual_coeffs_triangular(P, order, r2)
        bad = a.mismatches(b)
        checks.append(Check(f"segner = triangular, {name}", not bad, f"mismatches {bad[:3]}" if bad else ""))
    return checks


def suite_duality(order, **_):
    checks = []
    for s in P_FAMILY:
        P = _catalan(s)
        T = _full_dual(P, order)
        basis = [basis_element(P, k, 2 * order) for k in range(order + 1)]
        ok = all(
            dual_form(P, T, n, basis[k].truncate(order), basis=basis[n]) == (ONE if n == k else ZERO)
            for n in range(order + 1)
            for k in range(order + 1)
        )
        checks.append(Check(f"[e_n] e_k = delta, Pt={s}", ok))
    return checks


def suite_q_equation(order, **_):
    checks = []
    for s in P_FAMILY:
        P = _catalan(s)
        T = _full_dual(P, order)
        checks.append(Check(f"A = P(M, T), Pt={s}", verify_q_equation(P, T, order).is_zero()))
    return checks


def suite_diagonalization(order, seed, **_):
    rng = random.Random(seed)
    n = 2 * order
    checks = []
    for s in P_FAMILY:
        P = _catalan(s)
        T = _full_dual(P, n)
        ok = all(
            op_T_apply(P, T, basis_element(P, k, n)) == basis_element(P, k, n).scale(qr_qpow(k))
            for k in range(order + 1)
        )
        checks.append(Check(f"T e_k = q^k e_k, Pt={s}", ok))
        fs = [random_series(rng, order) for _ in range(3)]
        ok = True
        for f in fs:
            it = f
            for m in range(1, 4):
                it = op_T_apply(P, T, it)
                ok = ok and op_T_power(P, T, m, f) == it
        checks.append(Check(f"T^n = iterated T, Pt={s}", ok))
    return checks


def _phi_grid(p):
    ps = (2, 3) if p is None else (p,)
    return [(s, q) for s in PHI_FAMILY for q in ps]


def suite_inversion(order, p=None, **_):
    checks = []
    for s, pp in _phi_grid(p):
        ctx = PAryContext(lower_zseries(s, order), pp)
        inv = ctx.inverted(diamond(ctx, order))
        ok1 = ok2 = True
        for m in range(order + 1):
            zm = ZSeries.monomial(m, 1, order)
            ok1 = ok1 and u_apply(ctx, u_apply(inv, zm)) == zm
            ok2 = ok2 and u_apply(inv, u_apply(ctx, zm)) == zm
        checks.append(Check(f"U(phi,q) U(phi<>,1/q) = id, phi={s}, p={pp}", ok1))
        checks.append(Check(f"U(phi<>,1/q) U(phi,q) = id, phi={s}, p={pp}", ok2))
    return checks


def suite_involution(order, p=None, **_):
    checks = []
    for s, pp in _phi_grid(p):
        phi = lower_zseries(s, order)
        ctx = PAryContext(phi, pp)
        back = diamond(ctx.inverted(diamond(ctx, order)), order)
        checks.append(Check(f"(phi<>)<> = phi, phi={s}, p={pp}", back == phi.truncate(order)))
    return checks


def suite_tgen(order, p=None, **_):
    checks = []
    for s, pp in _phi_grid(p):
        ctx = PAryContext(lower_zseries(s, order), pp)
        a = tgen_from_dual(ctx, order)
        ok = a == tgen_functional(ctx, order) == tgen_ratio(ctx, order) == theta_constant_term(ctx, order)
        checks.append(Check(f"four constructions of T agree, phi={s}, p={pp}", ok))
    return checks


def suite_rogers_ramanujan(order, **_):
    ctx = PAryContext(lower_zseries("z", order), 2)
    tg = tgen_functional(ctx, order)
    cf = rogers_ramanujan_cfrac(order + 2, order)
    ai = q_airy(1, order, inverse_q=True)
    ratio = (ai * ai.dilate(1).recip(order)).truncate(order)
    ai2 = q_airy(2, order, inverse_q=True)
    ratio2 = (ai2.dilate(-1) * ai2.recip(order)).truncate(order)
    return [
        Check("continued fraction = T", cf == tg),
        Check("Ai_(1/q)(z)/Ai_(1/q)(qz) = T", ratio == tg),
        Check("Ai_(2,1/q)(z/q)/Ai_(2,1/q)(z) = T", ratio2 == tg),
    ]


def suite_qfuss(order, p=None, **_):
    ps = (2, 3, 4) if p is None else (p,)
    checks = []
    for pp in ps:
        a = qfuss(pp, order)
        b = qfuss_via_basis(pp, order)
        checks.append(Check(f"recursion = basis identity, p={pp}", a.values == b.values))
        closed = [fuss_catalan(pp, n) for n in range(order + 1)]
        checks.append(Check(f"q=1 closed form, p={pp}", a.at_q1() == closed == b.at_q1()))
        if pp == 2:
            checks.append(Check("p=2 equals Carlitz", a.values == carlitz(order).values))
    return checks


def suite_structural(order, seed, **_):
    rng = random.Random(seed)
    checks = []
    for s in P_FAMILY:
        P = _catalan(s)
        T = dual_coeffs_triangular(P, order, order * P.row_slope + 1)
        rows = all(T[(n, 0)] == ZERO and T[(n, 1)] == (ONE if n == 0 else ZERO) for n in range(order + 1))
        checks.append(Check(f"zero rows T_(n,0), T_(n,1), Pt={s}", rows))
        p1 = zts_eval_t(P.p, 0).truncate(order)
        ratio = True
        for k in range(order + 1):
            e = basis_element(P, k, order)
            lhs = (e.dilate(1) * p1).truncate(order)
            rhs = (e * zts_eval_t(P.p, k).truncate(order)).truncate(order)
            ratio = ratio and lhs == rhs
        checks.append(Check(f"basis ratio law, Pt={s}", ratio))
    ok = True
    for _ in range(200):
        ks = [(rng.randint(0, 3), rng.randint(0, 3)) for _ in range(rng.randint(1, 4))]
        prod = NormalOrdered.one()
        for k in ks:
            prod = no_mul(prod, NormalOrdered.monomial(*k))
        total = (sum(k[0] for k in ks), sum(k[1] for k in ks))
        ok = ok and prod == NormalOrdered.monomial(*total, qr_qpow(bn(ks)))
    checks.append(Check("monomial products carry q^B_n", ok))
    P = _catalan("1")
    n = 4
    table = PredualTable(P, 2 * n, 2 * n)
    ok_i = True
    idx = [(a, b) for a in range(n + 1) for b in range(n + 1)]
    for i in idx:
        for j in idx:
            got = pi2(P, {i: ONE}, {j: ONE}, 2 * n, 2 * n, table)
            want = table((i[0] + j[0], i[1] + j[1])).scale(qr_qpow(bn([i, j])))
            ok_i = ok_i and got == want
    checks.append(Check("Pi_2(et_i, et_j) = q^B_2 et_(i+j)", ok_i))
    ok_iii = True
    for _ in range(3):
        f = {i: QRat.coerce(rng.randint(-2, 2)) for i in idx}
        g = {i: QRat.coerce(rng.randint(-2, 2)) for i in idx}
        want = {}
        for i in idx:
            for j in idx:
                c = g[i] * f[j]
                if c:
                    det = i[0] * j[1] - j[0] * i[1]
                    k = (i[0] + j[0], i[1] + j[1])
                    want[k] = want.get(k, ZERO) + c * qr_qpow(bn([i, j]) + det)
        rhs = predual_combination(P, want, 2 * n, 2 * n, table)
        ok_iii = ok_iii and pi2(P, f, g, 2 * n, 2 * n, table) == rhs
    checks.append(Check("Pi_2(f, g) as det-twisted sum over g_i f_j", ok_iii))
    ok = True
    for _ in range(200):
        us = [(x, x + 1) for x in (rng.randint(0, 4) for _ in range(rng.randint(1, 5)))]
        ok = ok and bn(us) == bn_closed_form(us)
    checks.append(Check("B_m closed form on (n-1, n) vectors", ok))
    return checks


SUITES = {
    "carlitz": suite_carlitz,
    "cross-method": suite_cross_method,
    "duality": suite_duality,
    "q-equation": suite_q_equation,
    "diagonalization": suite_diagonalization,
    "inversion": suite_inversion,
    "involution": suite_involution,
    "tgen": suite_tgen,
    "rogers-ramanujan": suite_rogers_ramanujan,
    "qfuss": suite_qfuss,
    "structural": suite_structural,
}


def run_suite(name, order, p=None, seed=0):
    """Run one suite, or every suite in name order for ``all``."""
    names = sorted(SUITES) if name == "all" else [name]
    out = []
    for n in names:
        if n not in SUITES:
            raise KeyError(f"unknown suite {n!r}; choose from {', '.join(sorted(SUITES))} or all")
        for c in SUITES[n](order=order, p=p, seed=seed):
            out.append(Check(f"{n}: {c.name}", c.passed, c.detail))
    return out
