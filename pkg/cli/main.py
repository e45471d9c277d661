# cli/main.py
"""
tilecoh command line.

Exit codes: 0 on success, 1 when a computation fails (the error class is
printed) or an acceptance check mismatches, 2 for usage errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence, TextIO

from abelian import cokernel, smith_normal_form
from chair import full_tables, load_ledger, one_step_quotient
from common.config import Config, get_render_params
from common.errors import TilecohError
from common.logger import configure_root_logging, get_logger, quiet_third_party
from complexes import compute_cohomology, long_exact_sequence, mapping_cone, quotient_complex
from cw import to_dot, write_dot
from limits import analyse_limit, pair_limits
from tiling1d import factor_pair, tiling_cohomology

from . import inputs
from .acceptance import CHECKS, run_checks
from .render import (
    FORMATS,
    Report,
    exactness_json,
    groups_report,
    limit_report,
    listing_report,
    pair_limit_report,
    sequence_lines,
    snf_report,
)

log = get_logger(__name__)


# ---------- commands ----------

def cmd_snf(args: argparse.Namespace) -> Report:
    M = inputs.load_matrix(args.matrix)
    return snf_report(M, smith_normal_form(M), cokernel(M))


def cmd_cohomology(args: argparse.Namespace) -> Report:
    C = inputs.load_complex(args.complex)
    degrees = [args.degree] if args.degree is not None else list(C.degrees)
    groups = {k: compute_cohomology(C, k).group for k in degrees}
    return groups_report(groups)


def cmd_quotient(args: argparse.Namespace) -> Report:
    f = inputs.load_cochain_map(args.map)
    q = quotient_complex(f)
    groups = {k: compute_cohomology(q.complex, k).group for k in q.complex.degrees}
    report = groups_report(groups, label="H^{k}_Q", key="quotient")
    les = long_exact_sequence(f)
    check = les.check()
    for line in sequence_lines(les, check):
        report.add(line)
    report.payload["sequence"] = {"render": les.render(), **exactness_json(check)}
    report.ok = check.ok
    return report


def cmd_cone(args: argparse.Namespace) -> Report:
    cone = mapping_cone(inputs.load_cochain_map(args.map))
    groups = {k: compute_cohomology(cone, k).group for k in cone.degrees}
    report = groups_report(groups, label="H^{k}(cone)", key="cone")
    report.payload["complex"] = cone.to_json()
    return report


def cmd_limit(args: argparse.Namespace) -> Report:
    return limit_report(analyse_limit(inputs.load_system(args.system)))


def cmd_tiling(args: argparse.Namespace) -> Report:
    s = inputs.load_substitution(args.substitution)
    track = args.track_extensions or None
    if args.quotient_onto is None:
        return groups_report(tiling_cohomology(s), label=f"H^{{k}}(Ω_{s.name or 'σ'})", track=track)
    t = inputs.load_substitution(args.quotient_onto)
    if args.letter_map:
        s, m = inputs.load_letter_map(args.letter_map, s, t)
    else:
        m = inputs.default_letter_map(s, t)
    limits = pair_limits(factor_pair(s, t, m))
    return pair_limit_report(limits, t.name or "base", s.name or "space", track)


def cmd_chair(args: argparse.Namespace) -> Report:
    ledger = load_ledger(args.ledger)
    track = args.track_extensions or None
    if args.tables:
        tables = full_tables(ledger)
        report = Report(lines=tables.render(track).splitlines(), payload=tables.to_json(track))
        return report
    report = Report()
    rows = []
    for e in ledger.edges:
        groups = one_step_quotient(e)
        delta = ledger.delta(e)
        source = delta.source if delta else "none"
        report.add(f"{e}: H^1_Q = {groups[1]}, H^2_Q = {groups[2]}, δ: {source}")
        rows.append({"source": e.source.code, "target": e.target.code, "degeneration": e.degeneration,
                     "h1_q": str(groups[1]), "h2_q": str(groups[2]), "delta": source})
    report.payload = {"edges": rows}
    return report


def cmd_examples(args: argparse.Namespace) -> Report:
    if args.list:
        report = Report(lines=list(CHECKS), payload={"checks": list(CHECKS)})
        return report
    results = run_checks(None if args.run_all else args.checks)
    return listing_report("acceptance checks", ((r.name, r.ok, r.detail) for r in results))


def cmd_export_dot(args: argparse.Namespace) -> Report:
    K = inputs.load_cw(args.complex)
    if args.output:
        path = write_dot(K, Path(args.output))
        return Report(lines=[f"wrote {path}"], payload={"path": str(path)})
    dot = to_dot(K)
    return Report(lines=[dot.rstrip()], payload={"dot": dot})


# ---------- parser ----------

def _global_options(p: argparse.ArgumentParser, nested: bool) -> None:
    """Accepted before and after the subcommand; nested copies leave the top-level value alone."""
    def default(value):
        return argparse.SUPPRESS if nested else value

    p.add_argument("--format", choices=FORMATS, default=default("text"), help="output format (default text)")
    p.add_argument("--verbose", "-v", action="store_true", default=default(False), help="log at INFO")
    p.add_argument("--quiet", "-q", action="store_true", default=default(False), help="log errors only")
    p.add_argument("--log-json", action="store_true", default=default(False), help="JSON log records on stderr")
    p.add_argument("--log-file", metavar="PATH", default=default(Config.LOG_FILE),
                   help="also write log records to a rotating file (env TILECOH_LOG_FILE)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tilecoh",
        description="Exact integer cohomology and quotient cohomology of tiling spaces.",
    )
    _global_options(parser, nested=False)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    def command(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text, description=help_text)
        _global_options(p, nested=True)
        p.set_defaults(handler=handler)
        return p

    p = command("snf", cmd_snf, "Smith normal form of an integer matrix")
    p.add_argument("matrix", help='matrix JSON: {"rows", "cols", "entries"}')

    p = command("cohomology", cmd_cohomology, "cohomology of a cochain or CW complex")
    p.add_argument("complex")
    p.add_argument("--degree", type=int, default=None)

    p = command("quotient", cmd_quotient, "quotient cohomology of a pullback and its long exact sequence")
    p.add_argument("map", help="CW pair or cochain map JSON, or a built-in such as figure8")

    p = command("cone", cmd_cone, "cohomology of the mapping cone of a pullback")
    p.add_argument("map")

    p = command("limit", cmd_limit, "direct limit of a stationary system")
    p.add_argument("system")

    p = command("tiling", cmd_tiling, "cohomology of a 1-D substitution tiling space, optionally over a factor")
    p.add_argument("substitution", help="built-in, JSON, or inline rules like '1->21, 2->11'")
    p.add_argument("--quotient-onto", default=None, metavar="SUBST")
    p.add_argument("--letter-map", default=None, metavar="MAP")
    p.add_argument("--track-extensions", action="store_true")

    p = command("chair", cmd_chair, "chair-family cohomology through the degeneration ledger")
    p.add_argument("--tables", action="store_true", help="propagate and print the four tables")
    p.add_argument("--track-extensions", action="store_true")
    p.add_argument("--ledger", default="chair_ledger")

    p = command("examples", cmd_examples, "acceptance checks")
    p.add_argument("checks", nargs="*", help="check names; see --list")
    p.add_argument("--run-all", action="store_true")
    p.add_argument("--list", action="store_true")

    p = command("export-dot", cmd_export_dot, "Graphviz DOT for a CW complex or substitution approximant")
    p.add_argument("complex")
    p.add_argument("--output", "-o", default=None)
    return parser


def _validate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    if args.command == "tiling" and args.letter_map and not args.quotient_onto:
        parser.error("--letter-map needs --quotient-onto")
    if args.command == "examples" and not (args.run_all or args.list or args.checks):
        parser.error("examples: pass --run-all, --list or check names")


def _configure_logging(args: argparse.Namespace) -> None:
    level = None
    if args.verbose:
        level = "INFO"
    if args.quiet:
        level = "ERROR"
    configure_root_logging(level, json_logs=args.log_json, to_file=args.log_file)
    quiet_third_party()


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
        _validate(parser, args)
    except SystemExit as exc:
        return int(exc.code or 0)
    _configure_logging(args)
    log.debug("command %s (track extensions by default: %s)", args.command, get_render_params().track_extensions)
    try:
        report = args.handler(args)
    except TilecohError as exc:
        err.write(f"error: {exc.name}: {exc}\n")
        return 1
    report.write(out, args.format)
    return 0 if report.ok else 1


def main(argv: Optional[Sequence[str]] = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
