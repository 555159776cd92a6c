"""GCD, Sturm sequences and isolation of positive real roots, all exact."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from .poly import UniPoly

REFINE_WIDTH = Fraction(1, 10**6)


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd over Q; gcd(p, 0) = monic(p) and gcd(0, 0) = 0."""
    p._check(q)
    a, b = p, q
    while not b.is_zero():
        a, b = b, a.divmod(b)[1].monic()
    return a.monic()


def gcd_all(polys) -> UniPoly:
    polys = list(polys)
    if not polys:
        raise ValueError("gcd of an empty family")
    g = polys[0]
    for p in polys[1:]:
        g = poly_gcd(g, p)
    return g.monic()


def square_free(p: UniPoly) -> UniPoly:
    if p.degree <= 0:
        return p.monic()
    g = poly_gcd(p, p.derivative())
    return p.divmod(g)[0].monic()


def primitive_integer(p: UniPoly) -> UniPoly:
    """Integer-coefficient multiple of p with content 1 and positive leading coefficient."""
    if p.is_zero():
        return p
    den = lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    sign = 1 if ints[-1] > 0 else -1
    return UniPoly(p.var, [Fraction(sign * x // g) for x in ints])


def sturm_sequence(p: UniPoly) -> list[UniPoly]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        seq.append(-seq[-2].divmod(seq[-1])[1])
    seq.pop()
    return seq


def sign_variations(seq, x) -> int:
    signs = [v for v in (q(x) for q in seq) if v != 0]
    return sum(1 for u, v in zip(signs, signs[1:]) if (u > 0) != (v > 0))


def count_roots(seq, lo, hi) -> int:
    """Distinct real roots in (lo, hi] of the square-free head of ``seq``."""
    return sign_variations(seq, lo) - sign_variations(seq, hi)


def positive_root_bound(p: UniPoly) -> Fraction:
    """Cauchy bound: every root has modulus < 1 + max |c_i / lead|."""
    lead = p.lead
    return 1 + max((abs(c / lead) for c in p.coeffs[:-1]), default=Fraction(0))


@dataclass(frozen=True)
class RootReport:
    """Positive roots of a polynomial: exact rationals plus isolating intervals for the rest.

    ``identically_zero`` is set for the zero polynomial, whose root set is all of (0, inf).
    """

    exact: tuple[Fraction, ...] = ()
    intervals: tuple[tuple[Fraction, Fraction], ...] = ()
    identically_zero: bool = False
    sturm_count: int = field(default=0)

    @property
    def empty(self) -> bool:
        return not self.identically_zero and not self.exact and not self.intervals


def _rational_in(p: UniPoly, lo: Fraction, hi: Fraction, max_den: int):
    """Return the rational root of integer polynomial p in (lo, hi) if the interval is tight enough."""
    cand = ((lo + hi) / 2).limit_denominator(max_den)
    if lo < cand < hi and p(cand) == 0:
        return cand
    return None


def isolate_positive_roots(p: UniPoly) -> RootReport:
    """All roots of p in (0, inf), exact when rational, else intervals of width < 1e-6.

    A rational root c/q of a primitive integer polynomial has q dividing the leading
    coefficient N, and two such rationals differ by at least 1/N^2, so once an
    isolating interval is narrower than 1/(2 N^2) the best approximation with
    denominator <= N of its midpoint is the only candidate.
    """
    if p.is_zero():
        return RootReport(identically_zero=True)
    f = square_free(primitive_integer(p))
    while f.degree > 0 and f.coeff(0) == 0:
        f = UniPoly(f.var, f.coeffs[1:])
    if f.degree <= 0:
        return RootReport()
    f = primitive_integer(f)
    seq = sturm_sequence(f)
    bound = positive_root_bound(f)
    total = count_roots(seq, Fraction(0), bound)
    max_den = abs(int(f.lead))
    tight = Fraction(1, 2 * max_den * max_den)

    exact, intervals = [], []
    stack = [(Fraction(0), bound, total)]
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n > 1:
            mid = (lo + hi) / 2
            stack.append((mid, hi, count_roots(seq, mid, hi)))
            stack.append((lo, mid, count_roots(seq, lo, mid)))
            continue
        # exactly one root in (lo, hi]
        if f(hi) == 0:
            exact.append(hi)
            continue
        while True:
            found = _rational_in(f, lo, hi, max_den)
            if found is not None:
                exact.append(found)
                break
            if hi - lo < tight and hi - lo < REFINE_WIDTH:
                intervals.append((lo, hi))
                break
            mid = (lo + hi) / 2
            if f(mid) == 0:
                exact.append(mid)
                break
            if count_roots(seq, lo, mid):
                hi = mid
            else:
                lo = mid
    return RootReport(
        exact=tuple(sorted(exact)),
        intervals=tuple(sorted(intervals)),
        sturm_count=total,
    )
