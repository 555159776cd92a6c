"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import report
from .domains import CartanDomain, HartogsSpec, OutsideDomain, catalog, find_domain, label_for
from .epsilon import (
    chi_differences,
    constancy_characterization,
    epsilon_bipoly,
    eval_gamma_form,
    extract_coefficients,
)
from .poly import UnsupportedOffset
from .verifier import locus_certificate, verify_theorem_sweep

OK, FAILED, BAD_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def parse_rational(text: str) -> Fraction:
    """``p/q``, integers and finite decimals (``0.35``, ``1e-2``), converted exactly."""
    try:
        x = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational number: {text!r}") from exc
    return x


def parse_grid(text: str) -> list[Fraction]:
    """Comma-separated rationals; an item ``start:stop:step`` expands inclusively."""
    out = []
    for item in (s.strip() for s in text.split(",")):
        if not item:
            continue
        if ":" in item:
            parts = item.split(":")
            if len(parts) != 3:
                raise InputError(f"bad range {item!r}, expected start:stop:step")
            start, stop, step = map(parse_rational, parts)
            if step <= 0:
                raise InputError("grid step must be positive")
            x = start
            while x <= stop:
                out.append(x)
                x += step
        else:
            out.append(parse_rational(item))
    if not out:
        raise InputError("empty grid")
    if any(x <= 0 for x in out):
        raise InputError("grid values must be positive")
    return sorted(set(out))


def parse_int_list(text: str) -> list[int]:
    try:
        vals = [int(s) for s in text.split(",") if s.strip()]
    except ValueError as exc:
        raise InputError(f"bad integer list {text!r}") from exc
    if not vals:
        raise InputError("empty d0 list")
    return vals


def select_domain(args) -> CartanDomain:
    if args.label:
        try:
            return find_domain(args.label)
        except KeyError as exc:
            raise InputError(str(exc.args[0])) from exc
    if args.r is None:
        raise InputError("give --label or --r/--a/--b")
    a = args.a if args.a is not None else 2
    if args.r >= 2 and args.a is None:
        raise InputError("--a is required when r >= 2")
    b = args.b if args.b is not None else 0
    return CartanDomain(args.r, a, b, label_for(args.r, a, b))


def select_spec(args) -> HartogsSpec:
    if args.mu is None:
        raise InputError("--mu is required")
    return HartogsSpec(select_domain(args), parse_rational(args.mu), args.d0)


def emit(args, text: str):
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_expand(args) -> int:
    exp = extract_coefficients(select_spec(args))
    if args.format == "table":
        emit(args, report.expansion_table(exp))
    elif args.format == "csv":
        emit(args, report.expansion_csv(exp))
    else:
        emit(args, report.dumps(report.expansion_dict(exp)))
    return OK


def cmd_check(args) -> int:
    spec = select_spec(args)
    exp = extract_coefficients(spec)
    js = [args.j] if args.j is not None else list(range(spec.n + 1))
    if any(not 0 <= j <= spec.n for j in js):
        raise InputError(f"j outside 0..{spec.n}")
    diffs = chi_differences(spec.domain, spec.mu).differences
    rows = []
    agree = True
    for j in js:
        by_diff = constancy_characterization(spec, j)
        direct = exp.constant_flags[j]
        agree &= by_diff == direct
        rows.append({"j": j, "constant": direct, "characterization": by_diff})
    payload = {
        "domain": report.domain_dict(spec.domain),
        "mu": report.q(spec.mu),
        "d0": spec.d0,
        "differences": [report.q(x) for x in diffs],
        "checks": rows,
        "agree": agree,
    }
    if args.format == "json":
        emit(args, report.dumps(payload))
    else:
        lines = ["j,constant,characterization"] + [
            f"{r['j']},{str(r['constant']).lower()},{str(r['characterization']).lower()}" for r in rows
        ]
        emit(args, "\n".join(lines) + "\n")
    return OK if agree else FAILED


def _sweep_domains(args) -> list[CartanDomain]:
    if args.label or args.r is not None:
        return [select_domain(args)]
    return catalog(args.max_d)


def cmd_sweep(args) -> int:
    grid = parse_grid(args.grid)
    d0s = parse_int_list(args.d0_list)
    res = verify_theorem_sweep(
        _sweep_domains(args),
        d0s,
        grid,
        with_locus=not args.no_locus,
        workers=args.workers,
        _fault=args.inject_fault,
    )
    if args.format == "csv":
        emit(args, report.verdicts_csv(res.verdicts))
    elif args.format == "table":
        emit(args, report.sweep_table(res))
    else:
        emit(args, report.dumps(report.sweep_dict(res)))
    for line in res.counterexamples:
        print(line, file=sys.stderr)
    return OK if res.ok else FAILED


def cmd_locus(args) -> int:
    dom = select_domain(args)
    n = dom.d + args.d0
    js = [args.j] if args.j is not None else list(range(2, n + 1))
    if any(not 2 <= j <= n for j in js):
        raise InputError(f"j must lie in [2, {n}]")
    results = [locus_certificate(dom, args.d0, j) for j in js]
    if args.format == "json":
        emit(args, report.dumps([report.locus_dict(x) for x in results]))
    else:
        lines = []
        for x in results:
            rd = report.roots_dict(x.roots)
            lines.append(f"j={x.j} gcd={x.gcd.pretty()} positive_roots={{{', '.join(rd['exact'])}}}"
                         + (f" intervals={rd['intervals']}" if rd["intervals"] else ""))
            for k, p in enumerate(x.polys):
                lines.append(f"  poly[{k}] = {';'.join(report.poly_coeffs(p))}")
        emit(args, "\n".join(lines) + "\n")
    return OK


def cmd_eval(args) -> int:
    spec = select_spec(args)
    t, alpha = parse_rational(args.t), parse_rational(args.alpha)
    if not 0 < t <= 1:
        raise InputError(f"t = {t} outside (0, 1]")
    exact = epsilon_bipoly(spec)(t, alpha)
    approx = eval_gamma_form(spec, float(t), float(alpha))
    rel = abs(approx - float(exact)) / abs(float(exact)) if exact else abs(approx)
    payload = {"exact": report.q(exact), "float": repr(approx), "rel_diff": repr(rel)}
    if args.format == "json":
        emit(args, report.dumps(payload))
    else:
        emit(args, f"exact={payload['exact']} float={payload['float']} rel_diff={payload['rel_diff']}\n")
    return OK


def cmd_catalog(args) -> int:
    doms = catalog(args.max_d)
    if args.format == "csv":
        lines = ["label,r,a,b,d,gamma"] + [f"{D.label},{D.r},{D.a},{D.b},{D.d},{D.gamma}" for D in doms]
        emit(args, "\n".join(lines) + "\n")
    elif args.format == "table":
        emit(args, "".join(f"{D.label:<8} r={D.r} a={D.a} b={D.b} d={D.d} gamma={D.gamma}\n" for D in doms))
    else:
        emit(args, report.dumps([D.to_dict() for D in doms]))
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hartogs-eps", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, mu=True, fmt="json"):
        p.add_argument("--label", help="catalog label, e.g. E6, I_2,3, IV_5")
        p.add_argument("--r", type=int)
        p.add_argument("--a", type=int)
        p.add_argument("--b", type=int)
        if mu:
            p.add_argument("--mu", help="rational p/q or finite decimal")
        p.add_argument("--d0", type=int, default=1)
        p.add_argument("--format", choices=["json", "csv", "table"], default=fmt)
        p.add_argument("--output", "-o", help="write here instead of stdout")

    p = sub.add_parser("expand", help="Engliš coefficients a_j(t)")
    common(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("check", help="constancy of a_j two ways")
    common(p, fmt="csv")
    p.add_argument("--j", type=int)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("sweep", help="verify the constancy theorem over a catalog and mu grid")
    common(p, mu=False, fmt="csv")
    p.add_argument("--max-d", type=int, default=6)
    p.add_argument("--d0-list", default="1,2,3")
    p.add_argument("--grid", default="1/10:3:1/10", help="e.g. 1/2,1,3/2 or 1/10:3:1/10")
    p.add_argument("--no-locus", action="store_true", help="skip the exact locus certificates")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("locus", help="exact mu-locus where a_j is constant")
    common(p, mu=False, fmt="table")
    p.add_argument("--j", type=int)
    p.set_defaults(func=cmd_locus)

    p = sub.add_parser("eval", help="exact vs floating evaluation of epsilon")
    common(p, fmt="table")
    p.add_argument("--t", required=True)
    p.add_argument("--alpha", required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("catalog", help="list Cartan domains")
    p.add_argument("--max-d", type=int, default=16)
    p.add_argument("--format", choices=["json", "csv", "table"], default="json")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code else OK
    try:
        return args.func(args)
    except (InputError, OutsideDomain, UnsupportedOffset, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
