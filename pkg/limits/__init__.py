# limits/__init__.py
"""Direct limits of stationary systems and the limit cohomology of factor pairs."""

from .classify import LimitAnalysis, analyse_limit, classify_limit, induced_lochom
from .degenerations import (
    DEGENERATIONS,
    degeneration,
    degeneration_a,
    degeneration_b,
    degeneration_c,
    half_hex_quotient,
)
from .pairs import DegreeLimit, PairLimit, limit_of_pair, pair_limits
from .shift import suspension_shift
from .stationary import EventualKernel, StationarySystem, eventual_kernel

__all__ = [
    "StationarySystem", "EventualKernel", "eventual_kernel",
    "LimitAnalysis", "analyse_limit", "classify_limit", "induced_lochom",
    "DegreeLimit", "PairLimit", "limit_of_pair", "pair_limits",
    "degeneration", "degeneration_a", "degeneration_b", "degeneration_c", "DEGENERATIONS",
    "half_hex_quotient", "suspension_shift",
]
