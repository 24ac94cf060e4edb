"""Command-line front end.

Usage:
    dissoc rho "Bg"                          # spectral radius of a graph6 graph
    dissoc rho "G(1,0,0;6,5,6)"              # ... or of a family graph
    dissoc diss "F?AA_"                      # dissociation number with witness
    dissoc family build --type G --a 1 --p 6 --q 5 --r 6
    dissoc reduced solve --spec "G(0,0,0;2,1,2)"
    dissoc verify casepolys
    dissoc --workers 8 search trees --n 20
    dissoc --format json theorem1 --n 17 --confirm

Exit codes: 0 success, 1 verification FAIL or toolkit error, 2 usage or
parameter error.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime
from typing import List, Optional, Sequence

from dotenv import load_dotenv
from pydantic import BaseModel

from .models.config import RunConfig
from .models.errors import DissociationToolkitError
from .models.graph import Graph
from .models.reports import (
    DissReport,
    FamilyBuildReport,
    ReducedSolveReport,
    RhoReport,
    SearchResult,
    Theorem1Report,
    VerifyReport,
)
from .models.types import CheckStatus, FamilySpec, FamilyType
from .services.canonical_service import is_isomorphic
from .services.dissociation_service import diss_exact, tree_dissociation_certificate
from .services.graph_builders import build_family, theorem1_extremal
from .services.graph_codec import decode_graph6, encode_graph6, to_dot
from .services.reduced_model_service import anchor_eigenvector, perron_residual, reconstruct_perron, solve_rho_reduced
from .services.search_service import DEFAULT_CHUNK_SIZE, FreeTreeSource, LabeledConnectedSource
from .services.spectral_service import dense_spectral_radius, spectral_radius
from .utils import console
from .workflows.search_workflow import (
    PATTERN_LIMITATION,
    PATTERN_MAX_N,
    checkpoint_path,
    family_search,
    min_rho_search,
)
from .workflows.verify_workflow import FIXED_POINT_TOLERANCE, PERRON_TOLERANCE, SUITES, run_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dissoc",
        description="Spectral radius and dissociation number toolkit",
    )
    parser.add_argument("--tolerance", type=float, default=None, help="Numerical tolerance (default 1e-10)")
    parser.add_argument("--workers", type=int, default=None, help="Worker processes (default: all cores)")
    parser.add_argument("--format", dest="output_format", choices=["text", "json"], default=None)
    parser.add_argument("--output-dir", default=None, help="Checkpoints and saved reports (default data/)")
    parser.add_argument("--seed", type=int, default=None, help="Seed for randomized suites")
    parser.add_argument("--save", action="store_true", help="Also write the JSON report to the output dir")
    sub = parser.add_subparsers(dest="cmd", required=True)

    rho = sub.add_parser("rho", help="Spectral radius and Perron vector")
    rho.add_argument("graph", nargs="?", default="-", help="graph6 text or family label; '-' reads stdin")

    diss = sub.add_parser("diss", help="Dissociation number with a witness set")
    diss.add_argument("graph", nargs="?", default="-", help="graph6 text; '-' reads stdin")

    family = sub.add_parser("family", help="Family graphs")
    family_sub = family.add_subparsers(dest="family_cmd", required=True)
    build = family_sub.add_parser("build", help="Realize G(a,b,c;p,q,r) or H(a,b,c;p,q,r)")
    build.add_argument("--type", dest="family_type", choices=["G", "H"], default="G")
    for name in "abcpqr":
        build.add_argument(f"--{name}", type=int, default=0)

    reduced = sub.add_parser("reduced", help="Three-anchor reduced model")
    reduced_sub = reduced.add_subparsers(dest="reduced_cmd", required=True)
    solve = reduced_sub.add_parser("solve", help="Spectral radius from the fixed point")
    solve.add_argument("--spec", required=True, help='e.g. "G(0,0,0;2,1,2)"')

    verify = sub.add_parser("verify", help="Run a verification suite")
    verify.add_argument("suite", choices=list(SUITES))
    verify.add_argument("--samples", type=int, default=None)
    verify.add_argument("--count", type=int, default=None)
    verify.add_argument("--max-n", type=int, default=None)
    verify.add_argument("--n-lo", type=int, default=None)
    verify.add_argument("--n-hi", type=int, default=None)

    search = sub.add_parser("search", help="Minimum spectral radius search")
    search.add_argument("space", choices=["trees", "graphs", "family"])
    search.add_argument("--n", type=int, required=True)
    search.add_argument("--psi", type=int, default=None, help="Dissociation number (default n - 3)")
    search.add_argument("--chunk-size", type=int, default=DEFAULT_CHUNK_SIZE)
    search.add_argument("--no-checkpoint", action="store_true")

    theorem = sub.add_parser("theorem1", help="Tabulated extremal graph for n >= 12")
    theorem.add_argument("--n", type=int, required=True)
    theorem.add_argument("--confirm", action="store_true",
                         help="Confirm by tree search (n <= 22) or family search")
    return parser


def _read_graph_arg(text: str) -> str:
    if text == "-":
        text = sys.stdin.read()
    return text.strip()


def _parse_graph(text: str) -> tuple[Graph, Optional[FamilySpec]]:
    text = _read_graph_arg(text)
    if text[:1] in ("G", "H") and "(" in text:
        spec = FamilySpec.parse(text)
        return build_family(spec).graph, spec
    return decode_graph6(text), None


# ----------------------------------------------------------------------
# Commands
# ----------------------------------------------------------------------

def cmd_rho(args, config: RunConfig) -> RhoReport:
    g, spec = _parse_graph(args.graph)
    return RhoReport(
        graph6=encode_graph6(g),
        n=g.n,
        family=spec.label if spec else None,
        spectrum=spectral_radius(g, tol=config.tolerance),
    )


def cmd_diss(args, config: RunConfig) -> DissReport:
    g = decode_graph6(_read_graph_arg(args.graph))
    if g.is_tree():
        cert = tree_dissociation_certificate(g)
        method = "tree-dp"
    else:
        _, cert = diss_exact(g)
        method = "branch-and-bound"
    return DissReport(graph6=encode_graph6(g), n=g.n, diss=cert.size, method=method, certificate=cert)


def cmd_family_build(args, config: RunConfig) -> FamilyBuildReport:
    spec = FamilySpec(family=FamilyType(args.family_type),
                      **{name: getattr(args, name) for name in "abcpqr"})
    fg = build_family(spec)
    return FamilyBuildReport(spec=spec, n=fg.n, anchors=list(fg.anchors),
                             graph6=encode_graph6(fg.graph), dot=to_dot(fg.graph, spec.family.value))


def cmd_reduced_solve(args, config: RunConfig) -> ReducedSolveReport:
    spec = FamilySpec.parse(args.spec)
    rho = solve_rho_reduced(spec)
    direct = dense_spectral_radius(build_family(spec).graph)
    residual = perron_residual(spec, reconstruct_perron(spec, rho, anchor_eigenvector(spec, rho)))
    passed = abs(rho - direct) <= FIXED_POINT_TOLERANCE and residual <= PERRON_TOLERANCE
    return ReducedSolveReport(
        spec=spec, n=spec.n, rho_reduced=rho, rho_direct=direct, difference=abs(rho - direct),
        perron_residual=residual, status=CheckStatus.PASS if passed else CheckStatus.FAIL,
    )


def cmd_verify(args, config: RunConfig) -> VerifyReport:
    return run_suite(args.suite, config, samples=args.samples, count=args.count,
                     max_n=args.max_n, n_lo=args.n_lo, n_hi=args.n_hi)


def cmd_search(args, config: RunConfig) -> SearchResult:
    if args.space == "family":
        return family_search(args.n)
    psi = args.n - 3 if args.psi is None else args.psi
    source = FreeTreeSource(args.n) if args.space == "trees" else LabeledConnectedSource(args.n)
    checkpoint = None if args.no_checkpoint else checkpoint_path(config.output_dir, source, psi)
    console.banner(f"SEARCH {source.identity()}, psi = {psi}")
    return min_rho_search(source, psi, workers=config.workers, chunk_size=args.chunk_size,
                          checkpoint_dir=checkpoint)


def cmd_theorem1(args, config: RunConfig) -> Theorem1Report:
    spec = theorem1_extremal(args.n)
    m, l = divmod(args.n, 6)
    expected = build_family(spec).graph
    report = Theorem1Report(n=args.n, m=m, l=l, spec=spec, graph6=encode_graph6(expected))
    if not args.confirm:
        return report
    if args.n <= PATTERN_MAX_N:
        source = FreeTreeSource(args.n)
        result = min_rho_search(source, args.n - 3, workers=config.workers,
                                checkpoint_dir=checkpoint_path(config.output_dir, source, args.n - 3))
        confirmed = is_isomorphic(decode_graph6(result.winner.graph6), expected) and not result.ties
        method = "tree-search"
    else:
        result = family_search(args.n)
        confirmed = result.winner_spec == spec and not result.ties
        method = "family-search"
    result.notes.append(PATTERN_LIMITATION)
    return report.model_copy(update={"confirmed": confirmed, "method": method, "search": result})


# ----------------------------------------------------------------------
# Output
# ----------------------------------------------------------------------

def _text_lines(report: BaseModel) -> List[str]:
    if isinstance(report, RhoReport):
        s = report.spectrum
        return [f"rho = {s.rho:.12f}", f"residual = {s.residual:.2e} ({s.iterations} iterations)",
                "perron = " + " ".join(f"{v:.8f}" for v in s.perron)]
    if isinstance(report, DissReport):
        return [f"diss = {report.diss} ({report.method})",
                "set = {" + ", ".join(map(str, report.certificate.vertices)) + "}"]
    if isinstance(report, FamilyBuildReport):
        return [f"{report.spec.label}: n = {report.n}, anchors {report.anchors}", report.graph6, report.dot]
    if isinstance(report, ReducedSolveReport):
        return [f"{report.spec.label} (n = {report.n})",
                f"  reduced rho = {report.rho_reduced:.13f}",
                f"  direct rho  = {report.rho_direct:.13f}",
                f"  difference  = {report.difference:.2e}",
                f"  perron residual = {report.perron_residual:.2e}",
                report.status.value]
    if isinstance(report, VerifyReport):
        lines = [f"{c.status.value} {c.name}: {c.detail}" for c in report.checks]
        lines += [f"note: {note}" for note in report.notes]
        return lines + [f"{report.suite}: {report.status.value} ({report.wall_time:.1f}s)"]
    if isinstance(report, SearchResult):
        lines = [f"winner {report.winner.graph6} rho = {report.winner.rho:.12f}"]
        if report.winner_spec is not None:
            lines.append(f"spec {report.winner_spec.label}")
        lines += [f"tie {t.graph6}" for t in report.ties]
        lines.append(f"{report.candidates_examined:,} candidates, "
                     f"{report.exact_comparisons} exact comparisons, {report.wall_time:.1f}s")
        return lines + [f"note: {note}" for note in report.notes]
    if isinstance(report, Theorem1Report):
        lines = [f"n = {report.n} = 6*{report.m} + {report.l}: {report.spec.label}", report.graph6]
        if report.confirmed is not None:
            lines.append(f"{'confirmed' if report.confirmed else 'NOT confirmed'} by {report.method}")
            lines += [f"note: {note}" for note in report.search.notes]
        return lines
    return [report.model_dump_json(indent=2)]


def _failed(report: BaseModel) -> bool:
    status = getattr(report, "status", None)
    if status == CheckStatus.FAIL:
        return True
    return isinstance(report, Theorem1Report) and report.confirmed is False


def emit(report: BaseModel, config: RunConfig, command: str, save: bool = False) -> None:
    payload = report.model_dump(mode="json", by_alias=True)
    if config.json_output:
        print(json.dumps(payload, indent=2))
    else:
        for line in _text_lines(report):
            print(line)
    if save:
        config.output_dir.mkdir(parents=True, exist_ok=True)
        path = config.output_dir / f"{command}_{datetime.now().strftime('%Y%m%d_%H%M%S')}.json"
        with open(path, "w", encoding="utf-8") as f:
            json.dump(payload, f, indent=2)
        console.ok(f"Saved to {path}")


COMMANDS = {
    "rho": cmd_rho,
    "diss": cmd_diss,
    "family": cmd_family_build,
    "reduced": cmd_reduced_solve,
    "verify": cmd_verify,
    "search": cmd_search,
    "theorem1": cmd_theorem1,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, run one command and return its exit code."""
    load_dotenv()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    try:
        config = RunConfig.from_env(
            tolerance=args.tolerance,
            workers=args.workers,
            output_format=args.output_format,
            output_dir=args.output_dir,
            seed=args.seed,
        )
        console.use_stderr(config.json_output)
        report = COMMANDS[args.cmd](args, config)
        emit(report, config, args.cmd, save=args.save)
        return EXIT_FAIL if _failed(report) else EXIT_OK

    except KeyboardInterrupt:
        print("\n\nInterrupted by user", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as e:
        # parameter, parse and validation errors
        print(f"ERROR: {e}", file=sys.stderr)
        return EXIT_USAGE
    except DissociationToolkitError as e:
        print(f"ERROR: {e}", file=sys.stderr)
        return EXIT_FAIL
    finally:
        console.use_stderr(False)


if __name__ == "__main__":
    sys.exit(main())
