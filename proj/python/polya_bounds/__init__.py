"""Exact Polya-exponent bounds for quadratic forms positive on the standard simplex.

Matrices are sequences of rows whose entries are ``int``, ``str`` ("p" or
"p/q") or ``fractions.Fraction``. Results come back as ``Fraction`` / ``int``.
"""

from ._core import (
    NotPositiveOnSimplex,
    __version__,
    associated_form,
    bound_corollary,
    bound_klp,
    bound_new,
    bound_report,
    check_identity,
    expand,
    fkappa_report,
    identity_rhs,
    is_positive_on_simplex,
    max_over_simplex,
    min_over_simplex,
    polya_exponent,
    run_cli,
    strictly_positive_coefficients,
    sup_ratio_floor,
)

__all__ = [
    "NotPositiveOnSimplex",
    "__version__",
    "associated_form",
    "bound_corollary",
    "bound_klp",
    "bound_new",
    "bound_report",
    "check_identity",
    "expand",
    "fkappa_report",
    "identity_rhs",
    "is_positive_on_simplex",
    "max_over_simplex",
    "min_over_simplex",
    "polya_exponent",
    "run_cli",
    "strictly_positive_coefficients",
    "sup_ratio_floor",
]
