# locgroups/__init__.py
"""Limit groups Z[1/n] ⊕ Z ⊕ Z_t, their homomorphisms and exact sequences."""

from .extensions import LocSequence, Splice, resolve_extension, splice, triple_sequence
from .kernels import classify_presented, loc_cokernel, loc_is_exact, loc_kernel, rational_rank
from .limitgroup import FREE, LOC, TORSION, LimitGroup, Summand, parse_limit_group, support
from .lochom import LocHom, admissible

__all__ = [
    "LimitGroup", "Summand", "LOC", "FREE", "TORSION", "support", "parse_limit_group",
    "LocHom", "admissible",
    "classify_presented", "loc_cokernel", "loc_kernel", "loc_is_exact", "rational_rank",
    "resolve_extension", "LocSequence", "Splice", "splice", "triple_sequence",
]
