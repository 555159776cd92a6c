import math
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hartogs_eps.poly import UniPoly, VariableMismatch, product_of_linear_factors
from hartogs_eps.roots import (
    REFINE_WIDTH,
    count_roots,
    isolate_positive_roots,
    poly_gcd,
    square_free,
    sturm_sequence,
)


def M(*cs):
    return UniPoly("mu", cs)


def test_gcd_examples():
    assert poly_gcd(M(-1, 0, 1), M(-1, 1)) == M(-1, 1)
    p = M(4, 0, 2)
    assert poly_gcd(p, M()) == M(2, 0, 1)
    assert poly_gcd(M(), M()).is_zero()
    with pytest.raises(VariableMismatch):
        poly_gcd(M(1, 1), UniPoly("t", (1, 1)))


@pytest.mark.parametrize("seed", range(8))
def test_gcd_construct_and_check(seed):
    rng = random.Random(seed)
    pool = [F(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(8)]
    pool = list(dict.fromkeys(pool))
    shared = pool[:2]
    left = shared + pool[2:4]
    right = shared + pool[4:6]
    g = poly_gcd(product_of_linear_factors(left, "mu").scale(3), product_of_linear_factors(right, "mu"))
    assert g == product_of_linear_factors(shared, "mu")


def test_isolate_examples():
    r = isolate_positive_roots(M(-1, 1))
    assert r.exact == (1,) and not r.intervals
    assert isolate_positive_roots(M(1, 0, 1)).empty
    z = isolate_positive_roots(M())
    assert z.identically_zero and not z.empty


def test_irrational_root_interval():
    r = isolate_positive_roots(M(-2, 0, 1))
    assert r.exact == ()
    (lo, hi), = r.intervals
    assert hi - lo < REFINE_WIDTH
    assert lo < math.sqrt(2) < hi
    f = M(-2, 0, 1)
    assert f(lo) * f(hi) < 0


def test_mixed_roots_and_multiplicity():
    # (mu - 1/3)^2 (mu - 5/2) (mu^2 - 3) (mu + 4) mu
    p = product_of_linear_factors([F(1, 3), F(1, 3), F(5, 2), -4, 0], "mu") * M(-3, 0, 1)
    r = isolate_positive_roots(p)
    assert r.exact == (F(1, 3), F(5, 2))
    (lo, hi), = r.intervals
    assert lo < math.sqrt(3) < hi


def test_square_free():
    p = product_of_linear_factors([1, 1, 2, 2, 2], "mu")
    assert square_free(p) == product_of_linear_factors([1, 2], "mu")


@settings(max_examples=40, deadline=None)
@given(st.lists(st.fractions(min_value=-8, max_value=8, max_denominator=6), min_size=1, max_size=5, unique=True))
def test_isolate_finds_planted_rational_roots(roots):
    p = product_of_linear_factors(roots, "mu").scale(F(7, 3))
    r = isolate_positive_roots(p)
    assert r.exact == tuple(sorted(x for x in roots if x > 0))
    assert not r.intervals


def test_sturm_count_against_brute_force():
    p = product_of_linear_factors([F(1, 2), 1, 3, -2], "mu")
    seq = sturm_sequence(square_free(p))
    assert count_roots(seq, F(0), F(10)) == 3
    assert count_roots(seq, F(1, 2), F(3)) == 2  # half-open (1/2, 3]
    assert count_roots(seq, F(-5), F(0)) == 1
