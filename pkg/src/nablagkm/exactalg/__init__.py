"""Exact arithmetic kernel: rationals, sparse polynomials, rational functions,
root-factored fractions, and truncated t-series over Q(q)."""

from .mpoly import (
    DomainError,
    MPoly,
    Registry,
    RegistryMismatch,
    grevlex_key,
    poly_gcd,
    poly_lcm,
)
from .parsing import parse_frac, parse_poly, render_frac, render_poly
from .ratfrac import (
    QT,
    QT_ONE,
    QT_Q,
    QT_T,
    QT_ZERO,
    Q_ONLY,
    RatFrac,
    normalize,
    qt,
    x_registry,
)
from .rootfrac import RootFactored, canonical_factor, root_reduce
from .tseries import PoleError, TSeries, tseries_expand

__all__ = [
    "DomainError",
    "MPoly",
    "PoleError",
    "QT",
    "QT_ONE",
    "QT_Q",
    "QT_T",
    "QT_ZERO",
    "Q_ONLY",
    "RatFrac",
    "Registry",
    "RegistryMismatch",
    "RootFactored",
    "TSeries",
    "canonical_factor",
    "grevlex_key",
    "normalize",
    "parse_frac",
    "parse_poly",
    "poly_gcd",
    "poly_lcm",
    "qt",
    "render_frac",
    "render_poly",
    "root_reduce",
    "tseries_expand",
    "x_registry",
]
