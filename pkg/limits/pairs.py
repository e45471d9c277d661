# limits/pairs.py
"""Limits of a factor pair: base, space and quotient cohomology under substitution."""
from __future__ import annotations

from dataclasses import dataclass

from common.errors import IncompatibleMap, InadmissibleHom, IntertwiningFailure, Unclassifiable
from common.logger import get_logger
from complexes import CochainMap, induced_map, quotient_complex
from cw import CWPair
from locgroups import LimitGroup, LocHom

from .classify import analyse_limit, classify_limit, induced_lochom
from .stationary import StationarySystem

log = get_logger(__name__)


@dataclass(frozen=True)
class DegreeLimit:
    degree: int
    base: LimitGroup
    space: LimitGroup
    quotient: LimitGroup
    induced: LocHom | None = None

    def to_json(self) -> dict:
        payload = {
            "degree": self.degree,
            "base": str(self.base),
            "space": str(self.space),
            "quotient": str(self.quotient),
        }
        if self.induced is not None:
            payload["induced"] = self.induced.to_json()
        return payload


@dataclass(frozen=True)
class PairLimit:
    degrees: tuple[DegreeLimit, ...]

    def __getitem__(self, k: int) -> DegreeLimit:
        for d in self.degrees:
            if d.degree == k:
                return d
        raise KeyError(k)

    def quotient(self, k: int) -> LimitGroup:
        """H^k_Q of the limit pair; zero outside the computed degrees."""
        for d in self.degrees:
            if d.degree == k:
                return d.quotient
        return LimitGroup.zero()

    def quotients(self) -> dict[int, LimitGroup]:
        return {d.degree: d.quotient for d in self.degrees}

    def to_json(self) -> dict:
        return {"degrees": [d.to_json() for d in self.degrees]}


def limit_of_pair(f: CochainMap, base_map: CochainMap, space_map: CochainMap) -> PairLimit:
    """
    ``f`` is the pullback C(Y) -> C(X) of the factor map; ``base_map`` and
    ``space_map`` are the pullbacks of the substitution self-maps of Y and X.
    """
    if base_map.source != f.source or base_map.target != f.source:
        raise IntertwiningFailure("base self-map does not act on the base cochains")
    if space_map.source != f.target or space_map.target != f.target:
        raise IntertwiningFailure("space self-map does not act on the space cochains")
    q = quotient_complex(f)
    try:
        q_map = CochainMap.build(q.complex, q.complex, dict(space_map.matrices))
    except IncompatibleMap as exc:
        raise IntertwiningFailure(f"substitution does not preserve pulled-back cochains: {exc}") from exc

    out = []
    for k in f.degrees:
        sys_y = StationarySystem.from_cochain_map(base_map, k, name=f"H^{k}(Y)")
        sys_x = StationarySystem.from_cochain_map(space_map, k, name=f"H^{k}(X)")
        h = induced_map(f, k)
        if not h.compose(sys_y.endo).equals(sys_x.endo.compose(h)):
            raise IntertwiningFailure(f"factor map does not intertwine the substitutions on H^{k}")
        ay, ax = analyse_limit(sys_y), analyse_limit(sys_x)
        hq = classify_limit(StationarySystem.from_cochain_map(q_map, k, name=f"H^{k}_Q"))
        induced = None
        if not (ay.group.torsion or ax.group.torsion):
            try:
                induced = induced_lochom(h, ay, ax)
            except (InadmissibleHom, Unclassifiable) as exc:
                log.debug("no induced map on H^%d limits: %s", k, exc)
        out.append(DegreeLimit(k, ay.group, ax.group, hq, induced))
        log.info("degree %d: H(Y) = %s, H(X) = %s, H_Q = %s", k, ay.group, ax.group, hq)
    return PairLimit(tuple(out))


def pair_limits(pair: CWPair) -> PairLimit:
    if not pair.has_self_maps:
        raise IntertwiningFailure(f"{pair.space.name} -> {pair.base.name} carries no substitution maps")
    return limit_of_pair(pair.pullback, pair.base_map.pullback, pair.space_map.pullback)
