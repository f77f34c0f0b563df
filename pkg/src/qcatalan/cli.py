"""Command-line front end.

Exit status: 0 on success, 2 for unparsable or invalid input, 3 when a
requested window exceeds what the inputs determine, 4 when a check fails.
"""

import argparse
import json
import os
import sys

from .catalan import basis_element, catalan_from_ptilde, dual_coeffs_segner, dual_coeffs_triangular
from .errors import DomainError, InsufficientTruncationError, ParseError, UnsupportedError
from .expr import lower_zseries, lower_ztseries
from .fuss import carlitz, qfuss, qfuss_via_basis
from .pary import (
    PAryContext,
    diamond,
    tgen_from_dual,
    tgen_functional,
    tgen_ratio,
    theta_constant_term,
)
from .suites import SUITES, run_suite

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_TRUNCATION = 3
EXIT_CHECK = 4

FALLBACK_TRUNC = 12


def default_trunc():
    raw = os.environ.get("QCAT_DEFAULT_TRUNC")
    if raw is None:
        return FALLBACK_TRUNC
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"QCAT_DEFAULT_TRUNC must be an integer, got {raw!r}") from None
    if value < 1:
        raise DomainError("QCAT_DEFAULT_TRUNC must be at least 1")
    return value


class Report:
    def __init__(self, command, params):
        self.command = command
        self.params = params
        self.values = []
        self.checks = []

    def value(self, index, v, label=None):
        self.values.append((index, v, label))

    def check(self, name, passed):
        self.checks.append((name, bool(passed)))

    @property
    def ok(self):
        return all(p for _, p in self.checks)

    def to_json(self):
        return json.dumps(
            {
                "command": self.command,
                "params": self.params,
                "values": [{"index": list(i) if isinstance(i, tuple) else i, "value": str(v)} for i, v, _ in self.values],
                "checks": [{"name": n, "pass": p} for n, p in self.checks],
            },
            indent=2,
        )

    def to_plain(self):
        lines = [f"{label} = {v}" for _, v, label in self.values]
        lines += [f"[{'PASS' if p else 'FAIL'}] {n}" for n, p in self.checks]
        return "\n".join(lines)

    def to_latex(self):
        lines = []
        if self.values:
            lines.append("\\begin{aligned}")
            rows = [f"  {_latex_label(label)} &= {v.latex()}" for _, v, label in self.values]
            lines.append(" \\\\\n".join(rows))
            lines.append("\\end{aligned}")
        lines += [f"% {'PASS' if p else 'FAIL'}: {n}" for n, p in self.checks]
        return "\n".join(lines)

    def render(self, fmt):
        return {"json": self.to_json, "plain": self.to_plain, "latex": self.to_latex}[fmt]()


def _latex_label(label):
    head, _, rest = label.partition("_")
    return f"{head}_{{{rest}}}" if rest else head


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _arity(text):
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError("p must be at least 2")
    return value


def build_parser():
    parser = argparse.ArgumentParser(prog="qcat", description="Exact q-Catalan computations.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "latex", "plain"), default="plain")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dual-coeffs", parents=[common], help="dual coefficients by both methods")
    p.add_argument("--ptilde", required=True, help="Pt as an expression in z, t, q")
    p.add_argument("--known-z", type=int, help="Pt is known only through this power of z")
    p.add_argument("--r1", type=int)
    p.add_argument("--r2", type=int)

    p = sub.add_parser("carlitz", parents=[common], help="Carlitz q-Catalan numbers")
    p.add_argument("--n", type=int)

    p = sub.add_parser("qfuss", parents=[common], help="q-Fuss-Catalan numbers")
    p.add_argument("--p", type=_arity, required=True)
    p.add_argument("--n", type=int)

    for name, help_text in (("tgen", "generating function by four methods"), ("diamond", "the diamond series")):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--phi", required=True, help="phi as an expression in z, q")
        p.add_argument("--p", type=_arity, required=True)
        p.add_argument("--order", type=_positive)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", required=True, choices=sorted(SUITES) + ["all"])
    p.add_argument("--p", type=_arity)
    p.add_argument("--order", type=_positive)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("basis", parents=[common], help="normalized basis elements e_k")
    p.add_argument("--ptilde", required=True)
    p.add_argument("--known-z", type=int, help="Pt is known only through this power of z")
    p.add_argument("--k", type=int, required=True, help="largest index")
    p.add_argument("--order", type=_positive)
    return parser


def _nonneg(name, value):
    if value < 0:
        raise DomainError(f"--{name} must be nonnegative")
    return value


def _ptilde(args):
    known = None if args.known_z is None else _nonneg("known-z", args.known_z)
    return catalan_from_ptilde(lower_ztseries(args.ptilde, known))


def cmd_dual_coeffs(args, trunc):
    P = _ptilde(args)
    r1 = _nonneg("r1", args.r1 if args.r1 is not None else trunc)
    if args.r2 is not None:
        r2 = _nonneg("r2", args.r2)
    else:
        r2 = r1 * P.row_slope + 1 if P.t_degree_bound is not None else trunc
    rep = Report("dual-coeffs", {"ptilde": args.ptilde, "r1": r1, "r2": r2})
    a = dual_coeffs_segner(P, r1, r2)
    b = dual_coeffs_triangular(P, r1, r2)
    for i in a.nonzero():
        rep.value(i, a[i], f"T_({i[0]},{i[1]})")
    rep.check("segner = triangular", not a.mismatches(b))
    return rep


def cmd_carlitz(args, trunc):
    n = _nonneg("n", args.n if args.n is not None else trunc)
    rep = Report("carlitz", {"n": n})
    for k, v in enumerate(carlitz(n)):
        rep.value(k, v, f"C_{k}")
    return rep


def cmd_qfuss(args, trunc):
    n = _nonneg("n", args.n if args.n is not None else trunc)
    rep = Report("qfuss", {"p": args.p, "n": n})
    table = qfuss(args.p, n)
    for k, v in enumerate(table):
        rep.value(k, v, f"C_{args.p},{k}")
    rep.check("recursion = basis identity", table.values == qfuss_via_basis(args.p, n).values)
    return rep


def _context(args, order):
    return PAryContext(lower_zseries(args.phi, order), args.p)


def cmd_tgen(args, trunc):
    order = args.order or trunc
    ctx = _context(args, order)
    rep = Report("tgen", {"phi": args.phi, "p": args.p, "order": order})
    base = tgen_from_dual(ctx, order)
    for k in range(order + 1):
        rep.value(k, base[k], f"T_{k}")
    rep.check("functional relation = dual coefficients", tgen_functional(ctx, order) == base)
    rep.check("ratio g(z/q)/g(z) = dual coefficients", tgen_ratio(ctx, order) == base)
    rep.check("theta constant terms = dual coefficients", theta_constant_term(ctx, order) == base)
    return rep


def cmd_diamond(args, trunc):
    order = args.order or trunc
    ctx = _context(args, order)
    rep = Report("diamond", {"phi": args.phi, "p": args.p, "order": order})
    d = diamond(ctx, order)
    for k in range(order + 1):
        rep.value(k, d[k], f"d_{k}")
    rep.check("diamond twice returns phi", diamond(ctx.inverted(d), order) == ctx.phi.truncate(order))
    return rep


def cmd_verify(args, trunc):
    order = args.order or trunc
    rep = Report("verify", {"suite": args.suite, "p": args.p, "order": order, "seed": args.seed})
    for c in run_suite(args.suite, order, p=args.p, seed=args.seed):
        rep.check(c.name, c.passed)
    return rep


def cmd_basis(args, trunc):
    order = args.order or trunc
    P = _ptilde(args)
    k_max = _nonneg("k", args.k)
    rep = Report("basis", {"ptilde": args.ptilde, "k": k_max, "order": order})
    for k in range(k_max + 1):
        e = basis_element(P, k, order)
        for m in range(k, order + 1):
            if e[m]:
                rep.value((k, m), e[m], f"e_{k}[z^{m}]")
    return rep


COMMANDS = {
    "dual-coeffs": cmd_dual_coeffs,
    "carlitz": cmd_carlitz,
    "qfuss": cmd_qfuss,
    "tgen": cmd_tgen,
    "diamond": cmd_diamond,
    "verify": cmd_verify,
    "basis": cmd_basis,
}


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_OK
    try:
        report = COMMANDS[args.command](args, default_trunc())
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT_PARSE
    except InsufficientTruncationError as exc:
        print(f"insufficient truncation: {exc}", file=err)
        return EXIT_TRUNCATION
    except (DomainError, UnsupportedError) as exc:
        print(f"invalid input: {exc}", file=err)
        return EXIT_PARSE
    print(report.render(args.format), file=out)
    return EXIT_OK if report.ok else EXIT_CHECK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
