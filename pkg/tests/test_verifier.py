from fractions import Fraction as F

import pytest

from hartogs_eps.domains import CartanDomain, HartogsSpec, catalog, find_domain, kahler_einstein_mu
from hartogs_eps.verifier import (
    check_A_nonvanishing,
    constancy_profile,
    default_grid,
    locus_certificate,
    verify_bridge,
    verify_spec,
    verify_theorem_sweep,
)

DISC = CartanDomain(1, 2, 0)


def test_profiles():
    assert constancy_profile(HartogsSpec(DISC, 1, 1)) == {0, 1, 2}
    assert constancy_profile(HartogsSpec(DISC, 2, 1)) == {0}
    D = CartanDomain(2, 1, 0)
    assert (D.d, D.gamma) == (3, 3)
    mu0 = kahler_einstein_mu(D)
    assert mu0 == F(3, 4)
    prof = constancy_profile(HartogsSpec(D, mu0, 1))
    assert prof <= {0, 1}


def test_A_nonvanishing():
    assert check_A_nonvanishing(2)
    assert check_A_nonvanishing(3)
    with pytest.raises(ValueError):
        check_A_nonvanishing(1)


def test_bridge_examples():
    assert verify_bridge(DISC, 1, 1)
    assert verify_bridge(CartanDomain(1, 2, 1), 1, 1)
    assert verify_bridge(find_domain("E6"), F(12, 17), 1)


def test_full_constancy_in_hyperbolic_case():
    for D in catalog(6):
        if D.r == 1:
            for d0 in (1, 3):
                v = verify_spec(HartogsSpec(D, 1, d0))
                assert v.constant_js == frozenset(range(D.d + d0 + 1))
                assert v.ok


def test_locus_examples():
    for j in range(2, 7):
        res = locus_certificate(CartanDomain(1, 2, 2), 3, j)
        assert res.roots.exact == (1,) and res.ok
    res = locus_certificate(find_domain("E6"), 1, 2)
    assert res.roots.empty and res.ok


def test_sweep_small_is_consistent():
    res = verify_theorem_sweep(catalog(4), [1, 2], default_grid(), workers=1)
    assert res.ok, res.counterexamples
    assert len(res.verdicts) == len(catalog(4)) * 2 * 30


def test_sweep_order_independent():
    doms = catalog(5)
    grid = [F(3, 2), F(1), F(1, 5)]
    a = verify_theorem_sweep(doms, [1], grid, workers=1)
    b = verify_theorem_sweep(list(reversed(doms)), [1], list(reversed(grid)), workers=2)
    assert [v.key for v in a.verdicts] == [v.key for v in b.verdicts]
    assert [(v.constant_js, v.ok) for v in a.verdicts] == [(v.constant_js, v.ok) for v in b.verdicts]


def test_sweep_fault_reports_counterexample():
    res = verify_theorem_sweep(catalog(2), [1], [F(1), F(2)], with_locus=False, workers=1, _fault=True)
    assert not res.ok
    assert any("counterexample" in line and "mu=1" in line for line in res.counterexamples)


def test_sweep_rejects_empty_grid():
    with pytest.raises(ValueError, match="empty grid"):
        verify_theorem_sweep(catalog(2), [1], [])
