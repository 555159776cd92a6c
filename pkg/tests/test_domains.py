from fractions import Fraction as F

import pytest

from hartogs_eps.domains import (
    CartanDomain,
    FiberCoordinate,
    HartogsSpec,
    OutsideDomain,
    catalog,
    derive_invariants,
    fiber_coordinate,
    find_domain,
    kahler_einstein_mu,
    label_for,
)


@pytest.mark.parametrize("d", range(1, 9))
@pytest.mark.parametrize("a", [0, 2, 7])
def test_rank_one_invariants(d, a):
    assert derive_invariants(1, a, d - 1) == (d, d + 1)


def test_exceptional_invariants():
    assert derive_invariants(2, 6, 4) == (16, 12)
    assert derive_invariants(3, 8, 0) == (27, 18)


def test_bad_rank():
    with pytest.raises(ValueError):
        derive_invariants(0, 2, 0)
    with pytest.raises(ValueError):
        CartanDomain(2, -1, 0)


def test_catalog_smallest():
    cat = catalog(1)
    assert [(D.r, D.b, D.d) for D in cat] == [(1, 0, 1)]


def test_catalog_contains_e6():
    assert any(D.key == (2, 6, 4) and D.d == 16 for D in catalog(16))
    assert not any(D.key == (2, 6, 4) for D in catalog(15))


def test_catalog_invariants():
    cat = catalog(30)
    keys = [D.key for D in cat]
    assert len(keys) == len(set(keys))
    for D in cat:
        assert derive_invariants(D.r, D.a, D.b) == (D.d, D.gamma)
        assert D.d >= 1 and D.gamma >= 1
        assert D.gamma <= D.d + 1
        assert (D.gamma == D.d + 1) == (D.r == 1)
        if D.r == 1:
            assert D.a == 2
        for k in range(1, D.r + 1):
            assert 1 + D.b + (D.r - k) * D.a >= 1


def test_catalog_series_membership():
    keys = {D.key for D in catalog(16)}
    assert (2, 2, 1) in keys  # I_2,3
    assert (2, 4, 1 * 2) in keys  # II_5
    assert (3, 1, 0) in keys  # III_3
    assert (2, 3, 0) in keys  # IV_5
    assert (3, 2, 0) in keys  # I_3,3


def test_find_domain():
    assert find_domain("E6").key == (2, 6, 4)
    assert find_domain("e7").d == 27
    assert find_domain("IV_6").key == (2, 4, 0)
    assert find_domain("II_4").key == (2, 4, 0)
    assert find_domain("I_3,2").key == (2, 2, 1)
    assert find_domain("I_40,40").d == 1600
    with pytest.raises(KeyError):
        find_domain("V_3")
    assert label_for(2, 6, 4) == "E6"
    assert label_for(1, 99, 0) == "I_1,1"
    assert label_for(7, 1, 1) == ""


def test_kahler_einstein_mu():
    for D in catalog(20):
        if D.r == 1:
            assert kahler_einstein_mu(D) == 1
    assert kahler_einstein_mu(CartanDomain(2, 6, 4)) == F(12, 17)
    assert kahler_einstein_mu(CartanDomain(3, 8, 0)) == F(9, 14)


def test_fiber_coordinate():
    assert fiber_coordinate(F(1, 2), 0, F(1, 3)).t == 1
    assert fiber_coordinate(1, F(1, 4), 1).t == F(3, 4)
    with pytest.raises(OutsideDomain):
        fiber_coordinate(1, 1, 1)
    with pytest.raises(OutsideDomain):
        fiber_coordinate(1, 2, 1)
    with pytest.raises(OutsideDomain):
        FiberCoordinate(F(0))


def test_hartogs_spec():
    s = HartogsSpec(find_domain("E6"), F(12, 17), 2)
    assert s.n == 18
    with pytest.raises(ValueError):
        HartogsSpec(find_domain("E6"), 0, 1)
    with pytest.raises(ValueError):
        HartogsSpec(find_domain("E6"), 1, 0)
