"""Exact Engliš expansion of the epsilon function on Cartan-Hartogs domains."""

from .domains import CartanDomain, HartogsSpec, catalog, derive_invariants, find_domain, kahler_einstein_mu
from .epsilon import (
    chi_differences,
    chi_tilde,
    constancy_characterization,
    constancy_locus,
    epsilon_bipoly,
    eval_gamma_form,
    extract_coefficients,
)
from .poly import BiPoly, UniPoly
from .verifier import verify_theorem_sweep

__all__ = [
    "BiPoly",
    "CartanDomain",
    "HartogsSpec",
    "UniPoly",
    "catalog",
    "chi_differences",
    "chi_tilde",
    "constancy_characterization",
    "constancy_locus",
    "derive_invariants",
    "epsilon_bipoly",
    "eval_gamma_form",
    "extract_coefficients",
    "find_domain",
    "kahler_einstein_mu",
    "verify_theorem_sweep",
]
