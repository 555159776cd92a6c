"""The epsilon function of a Cartan-Hartogs domain as an exact polynomial in (t, alpha).

With t = 1 - ||w||^2 / N(z, z)^mu and n = d + d0,

    eps(t, alpha) = mu^-d * sum_{k=0}^{d} D^k chi(d) / k! * t^(d-k)
                    * Gamma(alpha - d + k) / Gamma(alpha - d - d0)

where D^k is the backward difference sum_j C(k, j) (-1)^j chi(d - j) and chi is a
product of Gamma ratios whose argument differences are nonnegative integers, so
chi is a polynomial of degree d. Expanding in alpha gives the coefficients
a_0(t), ..., a_n(t) of alpha^n, ..., alpha^0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from math import comb, factorial

from .domains import CartanDomain, HartogsSpec
from .poly import (
    BiPoly,
    UniPoly,
    as_fraction,
    finite_difference,
    gamma_ratio_poly,
    UnsupportedOffset,
    product_of_linear_factors,
)


def _gamma_args(domain: CartanDomain, k: int, gamma_sign: int = -1) -> tuple[Fraction, int]:
    """(constant part of the denominator argument, integer offset) for factor k of chi.

    The k-th factor is Gamma(mu*s + c + m) / Gamma(mu*s + c) with
    c = 1 - gamma + (k-1)a/2 and m = 1 + b + (r-k)a.
    """
    c = 1 + gamma_sign * domain.gamma + Fraction((k - 1) * domain.a, 2)
    m = 1 + domain.b + (domain.r - k) * domain.a
    return c, m


def chi_tilde(domain: CartanDomain, mu, *, _gamma_sign: int = -1) -> UniPoly:
    """chi(s) as an exact polynomial in s of degree d with leading coefficient mu^d."""
    mu = as_fraction(mu)
    roots = []
    for k in range(1, domain.r + 1):
        c, m = _gamma_args(domain, k, _gamma_sign)
        if m < 0:
            raise UnsupportedOffset(f"Gamma-ratio offset {m} is negative")
        # Gamma(x + m) / Gamma(x) vanishes at x = 0, -1, ..., 1 - m
        roots.extend(-(c + i) / mu for i in range(m))
    return product_of_linear_factors(roots, "s").scale(mu ** len(roots))


def chi_at(domain: CartanDomain, s: int) -> UniPoly:
    """chi(s) at a fixed integer s, as a polynomial in mu."""
    out = UniPoly.const(1, "mu")
    for k in range(1, domain.r + 1):
        c, m = _gamma_args(domain, k)
        out = out * gamma_ratio_poly(m, "mu").compose_linear(s, c)
    return out


@dataclass(frozen=True)
class ChiData:
    chi_poly: UniPoly
    samples: tuple[Fraction, ...]  # chi(d), chi(d-1), ..., chi(0)
    differences: tuple[Fraction, ...]  # D^k chi(d), k = 0..d


@lru_cache(maxsize=2048)
def chi_differences(domain: CartanDomain, mu, *, _gamma_sign: int = -1) -> ChiData:
    chi = chi_tilde(domain, mu, _gamma_sign=_gamma_sign)
    d = domain.d
    samples = tuple(chi(Fraction(d - j)) for j in range(d + 1))
    diffs = tuple(finite_difference(samples, k) for k in range(d + 1))
    return ChiData(chi, samples, diffs)


@lru_cache(maxsize=4096)
def alpha_factor(d: int, d0: int, k: int) -> UniPoly:
    """Gamma(alpha - d + k) / Gamma(alpha - d - d0) = prod_{j=d-k+1}^{d+d0} (alpha - j)."""
    return gamma_ratio_poly(d0 + k, "alpha").compose_linear(1, -(d + d0))


def epsilon_bipoly(spec: HartogsSpec, *, _gamma_sign: int = -1) -> BiPoly:
    d = spec.domain.d
    diffs = chi_differences(spec.domain, spec.mu, _gamma_sign=_gamma_sign).differences
    pref = 1 / spec.mu**d
    # grid[m][i]: coefficient of alpha^m t^i
    grid = [[Fraction(0)] * (d + 1) for _ in range(spec.n + 1)]
    for k in range(d + 1):
        if diffs[k] == 0:
            continue
        w = pref * diffs[k] / factorial(k)
        for m, c in enumerate(alpha_factor(d, spec.d0, k).coeffs):
            grid[m][d - k] += w * c
    return BiPoly(tuple(UniPoly("t", row) for row in grid))


@dataclass(frozen=True)
class EpsilonExpansion:
    spec: HartogsSpec
    a: tuple[UniPoly, ...]  # a[j] multiplies alpha^(n-j)

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def constant_flags(self) -> tuple[bool, ...]:
        return tuple(c.is_constant() for c in self.a)

    def bipoly(self) -> BiPoly:
        return BiPoly(tuple(reversed(self.a)))


def extract_coefficients(spec: HartogsSpec, *, _gamma_sign: int = -1) -> EpsilonExpansion:
    eps = epsilon_bipoly(spec, _gamma_sign=_gamma_sign)
    n = spec.n
    cs = list(eps.alpha_coeffs) + [UniPoly("t")] * (n + 1 - len(eps.alpha_coeffs))
    if len(cs) != n + 1:
        raise AssertionError(f"alpha-degree {eps.alpha_degree} exceeds n = {n}")
    return EpsilonExpansion(spec, tuple(cs[n - j] for j in range(n + 1)))


def contributing_orders(d: int, j: int) -> range:
    """Orders k < d whose term reaches a_j: those with max(0, d - j) <= k <= d - 1."""
    return range(max(0, d - j), d)


def constancy_characterization(spec: HartogsSpec, j: int) -> bool:
    """a_j is constant in t iff every non-top difference feeding it vanishes."""
    if not 0 <= j <= spec.n:
        raise ValueError(f"j = {j} outside 0..{spec.n}")
    diffs = chi_differences(spec.domain, spec.mu).differences
    return all(diffs[k] == 0 for k in contributing_orders(spec.domain.d, j))


def difference_in_mu(domain: CartanDomain, k: int) -> UniPoly:
    """D^k chi(d) as a polynomial in mu."""
    d = domain.d
    out = UniPoly("mu")
    for j in range(k + 1):
        out = out + chi_at(domain, d - j).scale(comb(k, j) * (-1) ** j)
    return out


def constancy_locus(domain: CartanDomain, d0: int, j: int) -> list[UniPoly]:
    """Polynomials in mu whose common positive zeros are exactly the mu with a_j constant."""
    n = domain.d + d0
    if not 1 <= j <= n:
        raise ValueError(f"j = {j} outside 1..{n}")
    return [difference_in_mu(domain, k) for k in contributing_orders(domain.d, j)]


def _ratio_float(x: float, m: int) -> float:
    """Gamma(x + m) / Gamma(x): log-Gamma when x > 0, direct product otherwise."""
    if x > 0:
        return math.exp(math.lgamma(x + m) - math.lgamma(x))
    return math.prod(x + i for i in range(m))


def eval_gamma_form(spec: HartogsSpec, t: float, alpha: float, mu: float | None = None) -> float:
    """Floating evaluation of the Gamma-ratio form, independent of the polynomial expansion.

    ``mu`` overrides ``spec.mu`` so irrational exponents can be evaluated.
    """
    dom = spec.domain
    d, d0 = dom.d, spec.d0
    mu = float(spec.mu) if mu is None else float(mu)

    def chi(s: int) -> float:
        # products of linear factors: no cancellation-amplified Gamma error
        val = 1.0
        for k in range(1, dom.r + 1):
            c, m = _gamma_args(dom, k)
            val *= math.prod(mu * s + float(c) + i for i in range(m))
        return val

    samples = [chi(d - j) for j in range(d + 1)]
    terms = []
    for k in range(d + 1):
        dk = math.fsum(comb(k, j) * (-1) ** j * samples[j] for j in range(k + 1))
        terms.append(dk / math.factorial(k) * t ** (d - k) * _ratio_float(alpha - d - d0, d0 + k))
    return math.fsum(terms) / mu**d
