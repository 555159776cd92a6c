"""JSON / CSV / text renderings. Rationals are always written as strings."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .domains import CartanDomain
from .epsilon import EpsilonExpansion
from .poly import UniPoly
from .roots import RootReport
from .verifier import LocusResult, SweepResult, Verdict

VERDICT_FIELDS = ["r", "a", "b", "d", "gamma", "mu", "d0", "constant_js", "bridge_holds", "theorem_consistent"]


def q(x: Fraction) -> str:
    """Canonical rational string: ``p`` or ``p/q`` in lowest terms with q > 0."""
    return str(Fraction(x))


def poly_coeffs(p: UniPoly) -> list[str]:
    return [q(c) for c in p.coeffs] or ["0"]


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def domain_dict(D: CartanDomain) -> dict:
    return D.to_dict()


def expansion_dict(exp: EpsilonExpansion) -> dict:
    return {
        "domain": domain_dict(exp.spec.domain),
        "mu": q(exp.spec.mu),
        "d0": exp.spec.d0,
        "n": exp.n,
        "a": [poly_coeffs(c) for c in exp.a],
        "a_pretty": [c.pretty() for c in exp.a],
        "constant_flags": list(exp.constant_flags),
    }


def expansion_table(exp: EpsilonExpansion) -> str:
    s = exp.spec
    D = s.domain
    head = f"# {D.label or 'domain'} (r,a,b)=({D.r},{D.a},{D.b}) d={D.d} gamma={D.gamma} mu={q(s.mu)} d0={s.d0} n={s.n}"
    rows = [head, f"{'j':>3}  {'constant':<8}  a_j(t)"]
    for j, (c, flag) in enumerate(zip(exp.a, exp.constant_flags)):
        rows.append(f"{j:>3}  {str(flag).lower():<8}  {c.pretty()}")
    return "\n".join(rows) + "\n"


def expansion_csv(exp: EpsilonExpansion) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["j", "constant", "coeffs", "pretty"])
    for j, c in enumerate(exp.a):
        w.writerow([j, str(c.is_constant()).lower(), ";".join(poly_coeffs(c)), c.pretty()])
    return buf.getvalue()


def roots_dict(r: RootReport) -> dict:
    return {
        "identically_zero": r.identically_zero,
        "exact": [q(x) for x in r.exact],
        "intervals": [[q(lo), q(hi)] for lo, hi in r.intervals],
    }


def locus_dict(res: LocusResult) -> dict:
    return {
        "domain": domain_dict(res.domain),
        "d0": res.d0,
        "j": res.j,
        "polys": [poly_coeffs(p) for p in res.polys],
        "gcd": poly_coeffs(res.gcd),
        "gcd_pretty": res.gcd.pretty(),
        "positive_roots": roots_dict(res.roots),
        "expected": [q(x) for x in res.expected],
        "ok": res.ok,
    }


def verdict_row(v: Verdict) -> dict:
    D = v.spec.domain
    return {
        "r": D.r,
        "a": D.a,
        "b": D.b,
        "d": D.d,
        "gamma": D.gamma,
        "mu": q(v.spec.mu),
        "d0": v.spec.d0,
        "constant_js": ";".join(str(j) for j in sorted(v.constant_js)),
        "bridge_holds": str(v.bridge_holds).lower(),
        "theorem_consistent": str(v.theorem_consistent).lower(),
    }


def verdict_dict(v: Verdict) -> dict:
    out = verdict_row(v)
    out.update(
        label=v.spec.domain.label,
        constant_js=sorted(v.constant_js),
        bridge_holds=v.bridge_holds,
        theorem_consistent=v.theorem_consistent,
        locus_summary={str(j): s for j, s in sorted(v.locus_summary.items())},
    )
    return out


def verdicts_csv(verdicts) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=VERDICT_FIELDS, lineterminator="\n")
    w.writeheader()
    for v in verdicts:
        w.writerow(verdict_row(v))
    return buf.getvalue()


def sweep_dict(res: SweepResult) -> dict:
    return {
        "ok": res.ok,
        "counterexamples": res.counterexamples,
        "verdicts": [verdict_dict(v) for v in res.verdicts],
        "loci": [locus_dict(x) for x in res.loci],
    }


def sweep_table(res: SweepResult) -> str:
    lines = [f"{'label':<8} {'r':>2} {'a':>2} {'b':>2} {'d':>3} {'d0':>3} {'mu':>6}  constant_js  ok"]
    for v in res.verdicts:
        D = v.spec.domain
        js = ",".join(str(j) for j in sorted(v.constant_js))
        lines.append(
            f"{D.label:<8} {D.r:>2} {D.a:>2} {D.b:>2} {D.d:>3} {v.spec.d0:>3} {q(v.spec.mu):>6}  {js:<11}  {'yes' if v.ok else 'NO'}"
        )
    lines.append(f"# {len(res.verdicts)} specs, {len(res.loci)} locus certificates, {len(res.counterexamples)} failures")
    return "\n".join(lines) + "\n"
