# limits/shift.py
"""Degree reindexing for product-with-a-cell suspensions of quotient pairs."""
from __future__ import annotations

from typing import Mapping

from common.errors import InputError
from locgroups import LimitGroup


def suspension_shift(groups: Mapping[int, LimitGroup], n: int, k: int) -> dict[int, LimitGroup]:
    """
    Quotient groups of (X', Y') in degree m become those of (X, Y) in degree
    m + n - k, where n is the ambient dimension and k that of the subspace
    along which X' is suspended. Degrees below the shift are zero.
    """
    if not n >= k >= 0:
        raise InputError(f"suspension needs n >= k >= 0, got n={n}, k={k}")
    shift = n - k
    out = {m: LimitGroup.zero() for m in range(shift)}
    out.update({m + shift: G for m, G in groups.items()})
    return dict(sorted(out.items()))
