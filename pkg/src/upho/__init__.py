"""Exact-arithmetic workbench for self-similar (upho) lattices and their cores.

The package builds finite rank-truncations of the infinite lattices it
studies, computes poset invariants in exact integer arithmetic, verifies the
rank-generating/characteristic-polynomial identity, and runs the obstruction
tests that disqualify finite lattices from being cores.
"""

from .errors import UphoError
from .intpoly import (
    IntPolynomial,
    IntPowerSeries,
    first_negative_coefficient,
    series_div,
    series_inverse,
    substitute_power,
)
from .isomorphism import find_embedding, is_isomorphic
from .poset import GradedPoset, PosetMap, build_poset, direct_product, dual, trim

__all__ = [
    "GradedPoset",
    "IntPolynomial",
    "IntPowerSeries",
    "PosetMap",
    "UphoError",
    "build_poset",
    "direct_product",
    "dual",
    "find_embedding",
    "first_negative_coefficient",
    "is_isomorphic",
    "series_div",
    "series_inverse",
    "substitute_power",
    "trim",
]

__version__ = "0.1.0"
