# complexes/__init__.py
"""Cochain complexes, cohomology, mapping cones, quotient complexes and long exact sequences."""

from .cochain import CochainComplex, CochainMap
from .cohomology import CohomologyResult, cohomology, compute_cohomology, induced_map
from .cone import QuotientComplex, is_injective_on_cochains, mapping_cone, quotient_complex
from .les import ExactSequence, connecting_map, long_exact_sequence

__all__ = [
    "CochainComplex", "CochainMap",
    "CohomologyResult", "cohomology", "compute_cohomology", "induced_map",
    "QuotientComplex", "mapping_cone", "quotient_complex", "is_injective_on_cochains",
    "ExactSequence", "connecting_map", "long_exact_sequence",
]
