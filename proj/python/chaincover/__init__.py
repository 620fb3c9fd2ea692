"""Support bounds, chained generators, and covering runs over finite fields.

Everything is implemented in the C++ core; this package re-exports the
bound/cover/oracle operations with plain-Python types (ints, lists, dicts).
"""

from chaincover._core import (
    canonical_rep,
    canonicalize,
    chained_rm,
    cover,
    cover_chained,
    cover_rm,
    exact_ghw,
    exact_nearest,
    exact_radius,
    ghw_binary,
    ghw_rm,
    mu_from_d,
    mu_rm,
    recursive_bound,
    rho,
    sweep_exact,
    sweep_mu,
    timing,
)

__all__ = [
    "canonical_rep",
    "canonicalize",
    "chained_rm",
    "cover",
    "cover_chained",
    "cover_rm",
    "exact_ghw",
    "exact_nearest",
    "exact_radius",
    "ghw_binary",
    "ghw_rm",
    "mu_from_d",
    "mu_rm",
    "recursive_bound",
    "rho",
    "sweep_exact",
    "sweep_mu",
    "timing",
]

__version__ = "0.1.0"
