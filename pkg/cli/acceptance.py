# cli/acceptance.py
"""
Self-contained acceptance checks behind ``tilecoh examples``.

Each check records mismatches on an ``Expectations`` object instead of
stopping at the first one, so a failing run reports every bad value.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

from abelian import FgAbGroup
from chair import full_tables, load_ledger, one_step_quotient, solenoid_base
from common.errors import InputError, TilecohError
from common.logger import get_logger
from complexes import CochainMap, compute_cohomology, induced_map, long_exact_sequence, mapping_cone, quotient_complex
from complexes.sampling import random_pair, random_subcomplex_pair
from cw import figure8_cover_pair, gamma_pd, gamma_tm
from limits import degeneration, half_hex_quotient, pair_limits
from locgroups import LimitGroup, parse_limit_group

log = get_logger(__name__)

ONE_STEP = {
    "A": {1: "Z", 2: "Z[1/2]"},
    "B": {1: "Z", 2: "Z[1/2] + Z"},
    "C": {1: "0", 2: "Z[1/2] + Z"},
}
DEGENERATION_VALUES = {"A": ("Z", "Z[1/2]"), "B": ("Z", "Z[1/2] + Z"), "C": ("0", "Z[1/2] + Z")}


class Expectations:
    def __init__(self) -> None:
        self.failures: list[str] = []

    def equal(self, what: str, actual, expected) -> None:
        if actual != expected:
            self.failures.append(f"{what}: got {actual}, expected {expected}")

    def group(self, what: str, actual: LimitGroup, expected: str, tags: bool = False) -> None:
        """Rendered comparison; with ``tags`` the extension tags must agree too."""
        want = parse_limit_group(expected)
        self.equal(what, actual.render(tags), want.render(tags))

    def true(self, what: str, condition: bool) -> None:
        if not condition:
            self.failures.append(what)


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""
    seconds: float = 0.0


CHECKS: dict[str, Callable[[Expectations], str]] = {}


def check(name: str):
    def register(fn: Callable[[Expectations], str]) -> Callable[[Expectations], str]:
        CHECKS[name] = fn
        return fn
    return register


# ---------- checks ----------

@check("figure8-cover")
def _figure8(ex: Expectations) -> str:
    f = figure8_cover_pair().pullback
    q = quotient_complex(f).complex
    ex.equal("H^0_Q", compute_cohomology(q, 0).group, FgAbGroup.trivial())
    ex.equal("H^1_Q", compute_cohomology(q, 1).group, FgAbGroup(1, (2,)))
    les = long_exact_sequence(f)
    ex.true(f"sequence not exact: {les.check().reason}", les.check().ok)
    return les.render()


@check("cone-equals-quotient")
def _cone(ex: Expectations, samples: int = 200, seed: int = 2024) -> str:
    rng = random.Random(seed)
    for sampler in (random_pair, random_subcomplex_pair):
        for i in range(samples):
            f = sampler(rng)
            cone, q = mapping_cone(f), quotient_complex(f).complex
            for k in range(cone.kmin, cone.kmax + 1):
                a, b = compute_cohomology(cone, k).group, compute_cohomology(q, k).group
                if a != b:
                    ex.failures.append(f"{sampler.__name__} sample {i}, degree {k}: cone {a}, quotient {b}")
    return f"{samples} split and {samples} subcomplex pairs"


@check("pd-over-solenoid")
def _pd(ex: Expectations) -> str:
    pair = gamma_pd()
    q = quotient_complex(pair.pullback)
    ex.equal("H^1_Q(Γ_PD, S1)", compute_cohomology(q.complex, 1).group, FgAbGroup.free(1))
    q_map = CochainMap.build(q.complex, q.complex, dict(pair.space_map.pullback.matrices))
    ex.equal("substitution on H^1_Q", induced_map(q_map, 1).matrix.to_rows(), [[-1]])
    ex.group("H^1_Q(Ω_PD, S2)", pair_limits(pair).quotient(1), "Z")
    return "H^1_Q = Z"


@check("tm-over-pd")
def _tm(ex: Expectations) -> str:
    limits = pair_limits(gamma_tm())
    d = limits[1]
    ex.group("H^1(Ω_PD)", d.base, "Z[1/2] + Z")
    ex.group("H^1(Ω_TM)", d.space, "Z[1/2] + Z")
    ex.group("H^1_Q(Ω_TM, Ω_PD)", d.quotient, "Z_2")
    h = d.induced
    if h is None:
        ex.failures.append("no induced map on H^1")
        return ""
    ex.equal("induced map on H^1", h.matrix, ((1, 0), (0, 2)))
    return f"induced map diag({h.matrix[0][0]}, {h.matrix[1][1]})"


@check("degenerations")
def _degenerations(ex: Expectations) -> str:
    for label, (h0, h1) in DEGENERATION_VALUES.items():
        g0, g1 = degeneration(label)
        ex.group(f"{label}: H^0_Q", g0, h0)
        ex.group(f"{label}: H^1_Q", g1, h1)
    return "A, B, C"


@check("solenoid-base")
def _solenoid(ex: Expectations) -> str:
    groups = solenoid_base()
    ex.group("H^1(S2 x S2)", groups[1], "Z[1/2]^2")
    ex.group("H^2(S2 x S2)", groups[2], "Z[1/4]")
    return f"H^1 = {groups[1]}, H^2 = {groups[2]}"


@check("half-hex")
def _half_hex(ex: Expectations) -> str:
    groups = half_hex_quotient()
    for k, want in ((0, "0"), (1, "0"), (2, "Z^2")):
        ex.group(f"H^{k}_Q(Ω_hh, S2 x S2)", groups.get(k, LimitGroup.zero()), want)
    return f"H^2_Q = {groups.get(2)}"


@check("one-step-quotients")
def _one_step(ex: Expectations) -> str:
    ledger = load_ledger()
    for e in ledger.edges:
        groups = one_step_quotient(e)
        for k, G in groups.items():
            want = ONE_STEP[e.degeneration].get(k, "0")
            ex.group(f"{e}: H^{k}_Q", G, want)
    return f"{len(ledger.edges)} edges"


@check("chair-chain")
def _chair(ex: Expectations) -> str:
    tables = full_tables()
    ex.group("H^2(/,0)", tables.group("h2", "/0"), "Z[1/4] + Z[1/2] + Z")
    ex.group("H^1(X,0)", tables.group("h1", "X0"), "Z[1/2]^2")
    chair_h2 = tables.group("h2", "X0")
    ex.group("H^2(X,0)", chair_h2, "Z[1/4] + Z[1/2]^2")
    ex.true("H^2(X,0) lost its 1/3 extension tag", 3 in chair_h2.extension_tags)
    ex.true("H^2_Q(X,0) has no Z_3", 3 in tables.group("q2", "X0").torsion)
    return f"H^2(X,0) = {chair_h2.render(True)}"


@check("chair-tables")
def _tables(ex: Expectations) -> str:
    ledger = load_ledger()
    tables = full_tables(ledger)
    for name in ("h1", "h2", "q1", "q2"):
        expected = ledger.expected_table(name)
        ex.equal(f"{name} cells", len(expected), len(ledger.nodes))
        for model, text in expected.items():
            ex.group(f"{name}{model}", tables.group(name, model), text, tags=True)
    for name in ("q1", "q2"):
        for model, G in tables.table(name).items():
            ex.true(f"{name}{model} = {G} keeps a Z[1/4]", 4 not in G.localized_summands)
    ex.true("some chain has other than one cancellation", all(n == 1 for n in tables.cancellations))
    return f"{len(tables.paths)} chains agree"


# ---------- runner ----------

def run_checks(names: list[str] | None = None) -> list[CheckResult]:
    selected = names or list(CHECKS)
    unknown = [n for n in selected if n not in CHECKS]
    if unknown:
        raise InputError(f"unknown checks {unknown}; known: {list(CHECKS)}")
    results = []
    for name in selected:
        ex = Expectations()
        start = time.perf_counter()
        try:
            summary = CHECKS[name](ex)
        except TilecohError as exc:
            ex.failures.append(f"{exc.name}: {exc}")
            summary = ""
        elapsed = time.perf_counter() - start
        ok = not ex.failures
        result = CheckResult(name, ok, "; ".join(ex.failures) if not ok else summary, elapsed)
        log.info("check %s: %s in %.2fs", name, "ok" if ok else "FAIL", elapsed)
        results.append(result)
    return results
