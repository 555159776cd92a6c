"""Dense univariate polynomials over the rationals, plus the (t, alpha) bivariate form.

Scalars are :class:`fractions.Fraction` throughout; nothing in this module
ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

VARIABLES = ("s", "t", "alpha", "mu")


class VariableMismatch(ValueError):
    """Two polynomials in different variables were combined."""


class UnsupportedOffset(ValueError):
    """A Gamma ratio whose argument difference is not a nonnegative integer."""


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted by the exact core")
    return Fraction(x)


def _trim(coeffs: Iterable) -> tuple[Fraction, ...]:
    c = [as_fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class UniPoly:
    """Polynomial ``sum(coeffs[i] * var**i)``; the zero polynomial has no coefficients."""

    var: str
    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        if self.var not in VARIABLES:
            raise ValueError(f"unknown variable tag {self.var!r}")
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def const(cls, c, var: str) -> UniPoly:
        return cls(var, (c,))

    @classmethod
    def monomial(cls, c, k: int, var: str) -> UniPoly:
        return cls(var, (0,) * k + (c,))

    @classmethod
    def linear(cls, slope, intercept, var: str) -> UniPoly:
        return cls(var, (intercept, slope))

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return self.degree <= 0

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def _check(self, other: UniPoly):
        if self.var != other.var:
            raise VariableMismatch(f"{self.var} vs {other.var}")

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly.const(other, self.var)
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.var, [self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(self.var, [-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly.const(other, self.var)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return self.scale(other)
        self._check(other)
        if self.is_zero() or other.is_zero():
            return UniPoly(self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(self.var, out)

    __rmul__ = __mul__

    def scale(self, c) -> UniPoly:
        c = as_fraction(c)
        return UniPoly(self.var, [c * x for x in self.coeffs])

    def __call__(self, x):
        """Horner evaluation; exact for Fraction/int input, float otherwise."""
        acc = 0 if isinstance(x, float) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + (float(c) if isinstance(x, float) else c)
        return acc

    def compose_linear(self, slope, intercept) -> UniPoly:
        """Return p(slope*y + intercept) as a polynomial in the same variable."""
        lin = UniPoly.linear(slope, intercept, self.var)
        acc = UniPoly(self.var)
        for c in reversed(self.coeffs):
            acc = acc * lin + c
        return acc

    def derivative(self) -> UniPoly:
        return UniPoly(self.var, [i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> UniPoly:
        if self.is_zero():
            return self
        return self.scale(1 / self.lead)

    def divmod(self, other: UniPoly) -> tuple[UniPoly, UniPoly]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        q = [Fraction(0)] * max(0, len(rem) - dq)
        inv = 1 / other.lead
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] * inv
            if c:
                q[i - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * b
        return UniPoly(self.var, q), UniPoly(self.var, rem[:dq] if dq > 0 else ())

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.var == other.var and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim((other,))
        return NotImplemented

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def pretty(self) -> str:
        """Human-readable form, e.g. ``2 - 1*t``; informational only."""
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            elif i == 1:
                body = f"{mag}*{self.var}"
            else:
                body = f"{mag}*{self.var}^{i}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"UniPoly({self.var}: {self.pretty()})"


def poly_arith(p: UniPoly, q, op: str) -> UniPoly:
    """Dispatch for ``add``/``sub``/``mul``/``scale``; ``q`` is a scalar for ``scale``."""
    if op == "scale":
        return p.scale(q)
    if not isinstance(q, UniPoly):
        raise TypeError(f"{op} needs two polynomials")
    p._check(q)
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown op {op!r}")


def product_of_linear_factors(roots: Sequence, var: str) -> UniPoly:
    """prod(x - root) as a monic polynomial; the empty product is 1."""
    acc = UniPoly.const(1, var)
    for r in roots:
        acc = acc * UniPoly.linear(1, -as_fraction(r), var)
    return acc


def gamma_ratio_poly(m, var: str) -> UniPoly:
    """Gamma(x + m) / Gamma(x) = x (x+1) ... (x+m-1) for integer m >= 0."""
    m = as_fraction(m)
    if m.denominator != 1 or m < 0:
        raise UnsupportedOffset(f"Gamma-ratio offset {m} is not a nonnegative integer")
    return product_of_linear_factors([-i for i in range(int(m))], var)


def finite_difference(values: Sequence, k: int) -> Fraction:
    """sum_j C(k, j) (-1)^j values[j]; with values[j] = f(x - j) this is the k-th backward difference."""
    if not 0 <= k < len(values):
        raise ValueError(f"difference order {k} out of range for {len(values)} samples")
    return sum(
        (comb(k, j) * (-1) ** j * as_fraction(values[j]) for j in range(k + 1)),
        Fraction(0),
    )


def elementary_symmetric(p: int, values: Sequence) -> Fraction:
    if not 0 <= p <= len(values):
        raise ValueError(f"e_{p} undefined for {len(values)} variables")
    # e[i] over the prefix processed so far
    e = [Fraction(1)] + [Fraction(0)] * p
    for x in values:
        x = as_fraction(x)
        for i in range(p, 0, -1):
            e[i] += x * e[i - 1]
    return e[p]


@dataclass(frozen=True)
class BiPoly:
    """Polynomial in alpha whose coefficients are t-polynomials: ``sum(alpha_coeffs[m] * alpha**m)``."""

    alpha_coeffs: tuple[UniPoly, ...]

    def __post_init__(self):
        cs = list(self.alpha_coeffs)
        for c in cs:
            if c.var != "t":
                raise VariableMismatch("BiPoly coefficients must be polynomials in t")
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "alpha_coeffs", tuple(cs))

    @property
    def alpha_degree(self) -> int:
        return len(self.alpha_coeffs) - 1

    @property
    def t_degree(self) -> int:
        return max((c.degree for c in self.alpha_coeffs), default=-1)

    def __add__(self, other: BiPoly) -> BiPoly:
        n = max(len(self.alpha_coeffs), len(other.alpha_coeffs))
        zero = UniPoly("t")
        get = lambda cs, i: cs[i] if i < len(cs) else zero  # noqa: E731
        return BiPoly(tuple(get(self.alpha_coeffs, i) + get(other.alpha_coeffs, i) for i in range(n)))

    @classmethod
    def outer(cls, tpoly: UniPoly, apoly: UniPoly) -> BiPoly:
        """The product tpoly(t) * apoly(alpha)."""
        if apoly.var != "alpha":
            raise VariableMismatch("second factor must be a polynomial in alpha")
        return cls(tuple(tpoly.scale(c) for c in apoly.coeffs))

    def __call__(self, t, alpha):
        acc = 0 if isinstance(alpha, float) else Fraction(0)
        for c in reversed(self.alpha_coeffs):
            acc = acc * alpha + c(t)
        return acc
