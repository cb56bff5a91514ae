"""Exact Hadamard products, powers and transforms of projective hypersurfaces.

Thin string-level wrapper over the C++ engine: polynomials are written in the
``x0*x2 - z4*x1^2`` grammar, points as ``[1:2:4]``.
"""

try:
    from ._hadamard import *  # noqa: F401,F403
    from ._hadamard import __doc__ as _core_doc  # noqa: F401
except ImportError:  # build-tree layout: extension next to the package
    from _hadamard import *  # noqa: F401,F403

__all__ = [
    "transform",
    "star_points",
    "star",
    "product",
    "power",
    "classify",
    "binomial_type",
    "is_idempotent",
    "min_exponent",
    "union_power",
    "multiplication_table",
    "verify_product",
    "verify_power",
    "parse_check",
]
