"""Numerical ranges of composition operators with finite-order elliptic symbols."""

from ._core import (
    EllipticSymbol,
    chebyshev_zeta,
    compare,
    composition_matrix,
    default_truncation,
    elliptic_symbol,
    ellipse_params,
    ellipse_support,
    envelope_point,
    lambda0,
    lambda_prime,
    order3_geometry,
    run_check,
    sextic_coeffs,
    sextic_eval,
    support_sweep,
)

__all__ = [
    "EllipticSymbol",
    "chebyshev_zeta",
    "compare",
    "composition_matrix",
    "default_truncation",
    "elliptic_symbol",
    "ellipse_params",
    "ellipse_support",
    "envelope_point",
    "lambda0",
    "lambda_prime",
    "order3_geometry",
    "run_check",
    "sextic_coeffs",
    "sextic_eval",
    "support_sweep",
]

__version__ = "0.1.0"
