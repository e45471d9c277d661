# cli/render.py
"""Text and JSON renderings of command results; both come from one Report."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping, TextIO

from abelian import ExactnessCheck, FgAbGroup, IntMatrix, SnfDecomposition
from common.schema import dumps
from complexes import ExactSequence
from limits import LimitAnalysis, PairLimit
from locgroups import LimitGroup

FORMATS = ("text", "json")


@dataclass
class Report:
    lines: list[str] = field(default_factory=list)
    payload: dict[str, Any] = field(default_factory=dict)
    ok: bool = True

    def add(self, line: str = "") -> "Report":
        self.lines.append(line)
        return self

    def text(self) -> str:
        return "\n".join(self.lines)

    def write(self, out: TextIO, fmt: str = "text") -> None:
        out.write((dumps(self.payload) if fmt == "json" else self.text()) + "\n")


def _group_text(G: FgAbGroup | LimitGroup, track: bool | None = None) -> str:
    return G.render(track) if isinstance(G, LimitGroup) else str(G)


def _group_json(G: FgAbGroup | LimitGroup, track: bool | None = None) -> Any:
    if isinstance(G, LimitGroup):
        return {"text": G.render(track), **G.classified.to_json()}
    return {"text": str(G), **G.to_json()}


def exactness_line(check: ExactnessCheck) -> str:
    if check:
        return "exact: yes"
    return f"exact: no (object {check.index}: {check.reason})"


def exactness_json(check: ExactnessCheck) -> dict:
    return {"exact": check.ok, "index": check.index, "reason": check.reason}


# ---------- per-command ----------

def snf_report(M: IntMatrix, snf: SnfDecomposition, coker: FgAbGroup) -> Report:
    r = Report()
    r.add("D =").add(str(snf.D))
    r.add(f"invariant factors: {', '.join(map(str, snf.invariant_factors)) or 'none'}")
    r.add(f"rank: {snf.rank}")
    r.add(f"cokernel: {coker}")
    r.payload = {
        "input": M.to_json(),
        "D": snf.D.to_json(),
        "U": snf.U.to_json(),
        "V": snf.V.to_json(),
        "invariant_factors": list(snf.invariant_factors),
        "rank": snf.rank,
        "cokernel": coker.to_json(),
    }
    return r


def groups_report(groups: Mapping[int, FgAbGroup | LimitGroup], label: str = "H^{k}",
                  track: bool | None = None, key: str = "cohomology") -> Report:
    r = Report()
    for k in sorted(groups):
        r.add(f"{label.format(k=k)} = {_group_text(groups[k], track)}")
    r.payload = {key: {str(k): _group_json(groups[k], track) for k in sorted(groups)}}
    return r


def sequence_lines(seq: ExactSequence, check: ExactnessCheck) -> list[str]:
    return [f"LES: {seq.render()}", exactness_line(check)]


def limit_report(analysis: LimitAnalysis) -> Report:
    r = Report()
    name = analysis.system.name or "system"
    r.add(f"lim {name} = {analysis.group}")
    r.add(f"eventual kernel depth: {analysis.kernel_depth}")
    if analysis.eigenvalues:
        r.add(f"free-part eigenvalues: {', '.join(map(str, analysis.eigenvalues))}")
    r.payload = {
        "system": analysis.system.to_json(),
        "limit": _group_json(analysis.group),
        "kernel_depth": analysis.kernel_depth,
        "eigenvalues": list(analysis.eigenvalues),
    }
    return r


def pair_limit_report(limits: PairLimit, base: str, space: str, track: bool | None = None) -> Report:
    r = Report()
    for d in limits.degrees:
        k = d.degree
        r.add(f"H^{k}(Ω_{base}) = {_group_text(d.base, track)}")
        r.add(f"H^{k}(Ω_{space}) = {_group_text(d.space, track)}")
        r.add(f"H^{k}_Q = {_group_text(d.quotient, track)}")
        if d.induced is not None and len(d.induced.source):
            rows = "; ".join(" ".join(str(q) for q in row) for row in d.induced.matrix)
            r.add(f"  induced map on H^{k}: [{rows}]")
    r.payload = {"base": base, "space": space, **limits.to_json()}
    return r


def listing_report(title: str, items: Iterable[tuple[str, bool, str]]) -> Report:
    r = Report()
    rows = list(items)
    r.add(title)
    for name, ok, detail in rows:
        r.add(f"  [{'ok' if ok else 'FAIL'}] {name}" + (f": {detail}" if detail else ""))
    failed = sum(1 for _, ok, _ in rows if not ok)
    r.add(f"{len(rows) - failed} passed, {failed} failed")
    r.ok = not failed
    r.payload = {
        "checks": [{"name": n, "ok": ok, "detail": d} for n, ok, d in rows],
        "passed": len(rows) - failed,
        "failed": failed,
    }
    return r
