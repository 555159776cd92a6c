"""Cartan domains by (r, a, b), their invariants, and Cartan-Hartogs parameter bundles."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .poly import as_fraction


class OutsideDomain(ValueError):
    """The point does not satisfy ||w||^2 < N(z, z)^mu."""


def derive_invariants(r: int, a: int, b: int) -> tuple[int, int]:
    """Complex dimension and genus of the Cartan domain with rank r and invariants a, b."""
    if r < 1:
        raise ValueError(f"rank must be positive, got {r}")
    if a < 0 or b < 0:
        raise ValueError(f"invariants must be nonnegative, got a={a}, b={b}")
    # r(r-1) is even, so the division is exact
    d = r * (r - 1) * a // 2 + r * b + r
    gamma = (r - 1) * a + b + 2
    return d, gamma


@dataclass(frozen=True)
class CartanDomain:
    r: int
    a: int
    b: int
    label: str = ""
    d: int = field(init=False)
    gamma: int = field(init=False)

    def __post_init__(self):
        d, gamma = derive_invariants(self.r, self.a, self.b)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "gamma", gamma)

    @property
    def key(self) -> tuple[int, int, int]:
        # a is irrelevant in rank one
        return (self.r, 2 if self.r == 1 else self.a, self.b)

    def to_dict(self) -> dict:
        return {"label": self.label, "r": self.r, "a": self.a, "b": self.b, "d": self.d, "gamma": self.gamma}


@dataclass(frozen=True)
class HartogsSpec:
    """The Cartan-Hartogs domain over ``domain`` with fiber dimension ``d0`` and exponent ``mu``."""

    domain: CartanDomain
    mu: Fraction
    d0: int

    def __post_init__(self):
        mu = as_fraction(self.mu)
        if mu <= 0:
            raise ValueError(f"mu must be positive, got {mu}")
        if self.d0 < 1:
            raise ValueError(f"fiber dimension must be positive, got {self.d0}")
        object.__setattr__(self, "mu", mu)

    @property
    def n(self) -> int:
        return self.domain.d + self.d0


@dataclass(frozen=True)
class FiberCoordinate:
    t: Fraction

    def __post_init__(self):
        t = as_fraction(self.t)
        if not 0 < t <= 1:
            raise OutsideDomain(f"fiber coordinate {t} not in (0, 1]")
        object.__setattr__(self, "t", t)


def fiber_coordinate(n_value, w_norm_sq, mu_power_of_n) -> FiberCoordinate:
    """t = 1 - ||w||^2 / N^mu, with N^mu supplied by the caller.

    ``n_value`` (the generic norm itself) is accepted for bookkeeping only; the
    caller owns the possibly transcendental power N^mu. For rank one,
    N(z, z) = 1 - |z|^2.
    """
    w_norm_sq = as_fraction(w_norm_sq)
    mu_power_of_n = as_fraction(mu_power_of_n)
    if as_fraction(n_value) <= 0 or mu_power_of_n <= 0:
        raise OutsideDomain("generic norm must be positive inside the base domain")
    if w_norm_sq < 0:
        raise ValueError("||w||^2 cannot be negative")
    t = 1 - w_norm_sq / mu_power_of_n
    if t <= 0:
        raise OutsideDomain(f"||w||^2 = {w_norm_sq} >= N^mu = {mu_power_of_n}")
    return FiberCoordinate(t)


def kahler_einstein_mu(domain: CartanDomain) -> Fraction:
    """gamma / (d + 1): the exponent at which the one-fiber Hartogs domain is Kahler-Einstein."""
    return Fraction(domain.gamma, domain.d + 1)


def _classical(max_d: int):
    # type I_{p,q}: p x q matrices, p <= q
    for p in range(1, max_d + 1):
        for q in range(p, max_d // p + 1):
            yield CartanDomain(p, 2, q - p, f"I_{p},{q}")
    # type II_m: m x m skew-symmetric, m >= 2
    m = 2
    while m * (m - 1) // 2 <= max_d:
        yield CartanDomain(m // 2, 4, 0 if m % 2 == 0 else 2, f"II_{m}")
        m += 1
    # type III_m: m x m symmetric
    m = 1
    while m * (m + 1) // 2 <= max_d:
        yield CartanDomain(m, 1, 0, f"III_{m}")
        m += 1
    # type IV_m (Lie ball), m >= 3
    for m in range(3, max_d + 1):
        yield CartanDomain(2, m - 2, 0, f"IV_{m}")


EXCEPTIONAL = (CartanDomain(2, 6, 4, "E6"), CartanDomain(3, 8, 0, "E7"))


def catalog(max_d: int) -> list[CartanDomain]:
    """Irreducible bounded symmetric domains of dimension <= max_d, one per (r, a, b).

    Low-dimensional coincidences (II_4 = IV_6, III_2 = IV_3, ...) keep the first
    label generated. Rank-one domains are stored with a = 2.
    """
    if max_d < 1:
        raise ValueError("max_d must be at least 1")
    seen: dict[tuple[int, int, int], CartanDomain] = {}
    for dom in [*_classical(max_d), *EXCEPTIONAL]:
        if dom.d > max_d:
            continue
        if dom.r == 1 and dom.a != 2:
            dom = CartanDomain(1, 2, dom.b, dom.label)
        seen.setdefault(dom.key, dom)
    return sorted(seen.values(), key=lambda D: (D.d, D.r, D.a, D.b))


def label_for(r: int, a: int, b: int) -> str:
    """Catalog label of the domain with these invariants, or '' if it has none."""
    d, _ = derive_invariants(r, a, b)
    key = (r, 2 if r == 1 else a, b)
    for dom in catalog(d):
        if dom.key == key:
            return dom.label
    return ""


def find_domain(label: str) -> CartanDomain:
    """Look up a catalog label such as ``E6``, ``I_2,3`` or ``IV_5``, including aliases lost to deduplication."""
    max_d = 27
    for dom in [*_classical(max_d), *EXCEPTIONAL]:
        if dom.label.lower() == label.lower():
            return CartanDomain(dom.r, 2 if dom.r == 1 else dom.a, dom.b, dom.label)
    # labels with larger parameters than the scan above
    kind, _, rest = label.partition("_")
    try:
        nums = [int(x) for x in rest.split(",")]
        if kind == "I" and len(nums) == 2:
            p, q = sorted(nums)
            return CartanDomain(p, 2, q - p, f"I_{p},{q}")
        if kind == "II" and len(nums) == 1 and nums[0] >= 2:
            m = nums[0]
            return CartanDomain(m // 2, 2 if m < 4 else 4, m % 2 * 2, label)
        if kind == "III" and len(nums) == 1 and nums[0] >= 1:
            return CartanDomain(nums[0], 2 if nums[0] == 1 else 1, 0, label)
        if kind == "IV" and len(nums) == 1 and nums[0] >= 3:
            return CartanDomain(2, nums[0] - 2, 0, label)
    except ValueError:
        pass
    raise KeyError(f"unknown domain label {label!r}")
