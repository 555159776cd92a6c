"""Checks that a_j (j >= 2) is constant exactly on the complex hyperbolic space.

Two routes: an exact sweep over a finite mu grid, and a certificate over all
mu > 0 from the common positive roots of the constancy-locus polynomials.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .domains import CartanDomain, HartogsSpec
from .epsilon import chi_differences, constancy_locus, extract_coefficients
from .poly import elementary_symmetric, product_of_linear_factors
from .roots import RootReport, gcd_all, isolate_positive_roots

WORKERS_ENV = "HARTOGS_EPS_WORKERS"


def default_grid() -> list[Fraction]:
    return [Fraction(q, 10) for q in range(1, 31)]


def constancy_profile(spec: HartogsSpec, *, _fault: bool = False) -> frozenset[int]:
    exp = extract_coefficients(spec, _gamma_sign=1 if _fault else -1)
    return frozenset(j for j, flag in enumerate(exp.constant_flags) if flag)


def check_A_nonvanishing(n: int) -> bool:
    """Every coefficient of prod_{j=q}^{n} (alpha - j), q = 2, 3, is nonzero with |A_p^q| = e_p(q..n)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    for q in (2, 3):
        roots = list(range(q, n + 1))
        poly = product_of_linear_factors(roots, "alpha")
        top = len(roots)
        for p in range(top + 1):
            c = poly.coeff(top - p)
            if c == 0 or abs(c) != elementary_symmetric(p, roots):
                return False
    return True


def _bridge(spec: HartogsSpec, profile: frozenset[int], *, _fault: bool = False) -> bool:
    if not any(j >= 2 for j in profile):
        return True
    d = spec.domain.d
    diffs = chi_differences(spec.domain, spec.mu, _gamma_sign=1 if _fault else -1).differences
    if d == 1:
        return diffs[0] == 0 and spec.mu == 1
    return diffs[d - 1] == 0 and diffs[d - 2] == 0


def verify_bridge(domain: CartanDomain, mu, d0: int) -> bool:
    spec = HartogsSpec(domain, mu, d0)
    return _bridge(spec, constancy_profile(spec))


@dataclass(frozen=True)
class LocusResult:
    domain: CartanDomain
    d0: int
    j: int
    polys: tuple
    gcd: object
    roots: RootReport

    @property
    def expected(self) -> tuple[Fraction, ...]:
        return (Fraction(1),) if self.domain.r == 1 else ()

    @property
    def ok(self) -> bool:
        r = self.roots
        return not r.identically_zero and not r.intervals and r.exact == self.expected


def locus_certificate(domain: CartanDomain, d0: int, j: int) -> LocusResult:
    polys = constancy_locus(domain, d0, j)
    g = gcd_all(polys)
    return LocusResult(domain, d0, j, tuple(polys), g, isolate_positive_roots(g))


@dataclass(frozen=True)
class Verdict:
    spec: HartogsSpec
    constant_js: frozenset[int]
    bridge_holds: bool
    theorem_consistent: bool
    locus_summary: dict = field(default_factory=dict, compare=False)

    @property
    def key(self):
        D = self.spec.domain
        return (D.d, D.r, D.a, D.b, self.spec.d0, self.spec.mu)

    @property
    def ok(self) -> bool:
        return self.bridge_holds and self.theorem_consistent


def verify_spec(spec: HartogsSpec, *, _fault: bool = False) -> Verdict:
    profile = constancy_profile(spec, _fault=_fault)
    high = any(j >= 2 for j in profile)
    hyperbolic = spec.domain.r == 1 and spec.mu == 1
    return Verdict(
        spec=spec,
        constant_js=profile,
        bridge_holds=_bridge(spec, profile, _fault=_fault),
        theorem_consistent=high == hyperbolic,
    )


@dataclass
class SweepResult:
    verdicts: list[Verdict]
    loci: list[LocusResult]
    counterexamples: list[str]

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def _domain_task(args):
    domain, d0_list, mu_grid, with_locus, fault = args
    verdicts, loci, bad = [], [], []
    for d0 in d0_list:
        locus_by_j = {}
        if with_locus:
            cache = {}
            for j in range(2, domain.d + d0 + 1):
                lo = max(0, domain.d - j)
                if lo not in cache:
                    cache[lo] = locus_certificate(domain, d0, j)
                res = cache[lo]
                res = LocusResult(domain, d0, j, res.polys, res.gcd, res.roots)
                locus_by_j[j] = res
                loci.append(res)
                if not res.ok:
                    bad.append(f"locus: {domain.label or domain.key} d0={d0} j={j} roots={_fmt_roots(res.roots)}")
        for mu in mu_grid:
            v = verify_spec(HartogsSpec(domain, mu, d0), _fault=fault)
            if locus_by_j:
                summary = {j: _fmt_roots(res.roots) for j, res in locus_by_j.items()}
                v = Verdict(v.spec, v.constant_js, v.bridge_holds, v.theorem_consistent, summary)
                for j, res in locus_by_j.items():
                    on_locus = mu in res.roots.exact
                    if on_locus != (j in v.constant_js):
                        bad.append(f"grid/locus disagree: {domain.label or domain.key} d0={d0} mu={mu} j={j}")
            if not v.ok:
                bad.append(
                    f"counterexample: {domain.label or domain.key} (r,a,b)={domain.key} mu={mu} d0={d0} "
                    f"constant_js={sorted(v.constant_js)} bridge={v.bridge_holds} consistent={v.theorem_consistent}"
                )
            verdicts.append(v)
    return verdicts, loci, bad


def _fmt_roots(r: RootReport) -> str:
    if r.identically_zero:
        return "all mu"
    parts = [str(x) for x in r.exact] + [f"({float(lo):.7g}, {float(hi):.7g})" for lo, hi in r.intervals]
    return "{" + ", ".join(parts) + "}"


def worker_count() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def verify_theorem_sweep(
    domains: Iterable[CartanDomain],
    d0_list: Sequence[int],
    mu_grid: Sequence,
    *,
    with_locus: bool = True,
    workers: int | None = None,
    _fault: bool = False,
) -> SweepResult:
    """Exact grid verdicts for every (domain, d0, mu), plus locus certificates per (domain, d0, j).

    Output order is fixed by sorting, so it does not depend on scheduling.
    """
    mu_grid = [Fraction(m) for m in mu_grid]
    if not mu_grid:
        raise ValueError("empty grid")
    if any(m <= 0 for m in mu_grid):
        raise ValueError("grid values must be positive")
    tasks = [(D, tuple(d0_list), tuple(mu_grid), with_locus, _fault) for D in domains]
    workers = worker_count() if workers is None else workers
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
            results = list(pool.map(_domain_task, tasks))
    else:
        results = [_domain_task(t) for t in tasks]
    verdicts = sorted((v for r in results for v in r[0]), key=lambda v: v.key)
    loci = sorted(
        (x for r in results for x in r[1]),
        key=lambda x: (x.domain.d, x.domain.r, x.domain.a, x.domain.b, x.d0, x.j),
    )
    bad = sorted(b for r in results for b in r[2])
    return SweepResult(verdicts, loci, bad)
