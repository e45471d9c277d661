# limits/degenerations.py
"""
The one-dimensional quotient patterns behind the chair family, each computed
from its approximant pair:

* A: two dyadic solenoids folded onto one;
* B: two period-doubling spaces folded onto one;
* C: the two-loop complex with the loops wrapped twice, over the solenoid.
"""
from __future__ import annotations

from functools import cache
from typing import Callable

from common.errors import InputError
from common.logger import get_logger
from cw import CWPair, circle, circle_doubling, collapse_points, folded, gamma_pd, gamma_tm_prime
from locgroups import LimitGroup

from .pairs import pair_limits
from .shift import suspension_shift

log = get_logger(__name__)


def _quotients(pair: CWPair) -> tuple[LimitGroup, LimitGroup]:
    limits = pair_limits(pair)
    return limits.quotient(0), limits.quotient(1)


@cache
def degeneration_a() -> tuple[LimitGroup, LimitGroup]:
    return _quotients(folded(circle(), circle_doubling()))


@cache
def degeneration_b() -> tuple[LimitGroup, LimitGroup]:
    pd = gamma_pd()
    return _quotients(folded(pd.space, pd.space_map))


@cache
def degeneration_c() -> tuple[LimitGroup, LimitGroup]:
    return _quotients(gamma_tm_prime())


DEGENERATIONS: dict[str, Callable[[], tuple[LimitGroup, LimitGroup]]] = {
    "A": degeneration_a,
    "B": degeneration_b,
    "C": degeneration_c,
}


def degeneration(label: str) -> tuple[LimitGroup, LimitGroup]:
    try:
        h0, h1 = DEGENERATIONS[label.upper()]()
    except KeyError as exc:
        raise InputError(f"unknown degeneration '{label}'") from exc
    log.debug("degeneration %s: H^0_Q = %s, H^1_Q = %s", label, h0, h1)
    return h0, h1


def half_hex_quotient() -> dict[int, LimitGroup]:
    """Three points over one, suspended into the plane: only H^2_Q survives."""
    pair = collapse_points(3)
    base = pair_limits(pair).quotients()
    return suspension_shift(base, n=2, k=0)
