"""Command-line interface tying generators, solvers, constructions and the audit together.

Exit codes: 0 success (and, for audit, no mismatches beyond the expected
fingerprint); 1 audit found unexplained mismatches or a bound check
failed; 2 usage or domain error (malformed files, out-of-domain
parameters); 3 solver node budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import claims, constructions, families
from .coloring import (DEFAULT_NODE_BUDGET, EdgeColoring, VertexColoring,
                       chromatic_index, chromatic_number)
from .errors import BudgetExceededError, DomainError, EdgeListFormatError
from .graphs import Graph, bipartition, format_edge_list, read_edge_list
from .linegraph import line_graph
from .nordhaus_gaddum import NgReport, ng_check, ng_construct, ng_feasible

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


@dataclass
class CliConfig:
    """Validated shape of one invocation's shared flags."""

    subcommand: str
    format: str = "text"
    budget: int = DEFAULT_NODE_BUDGET
    workers: int = 1

    def __post_init__(self):
        if not self.subcommand:
            raise DomainError("exactly one subcommand is required")
        if self.format not in ("text", "markdown", "csv", "json"):
            raise DomainError(f"unknown output format {self.format!r}")
        if self.budget <= 0:
            raise DomainError(f"budget must be positive, got {self.budget}")
        if self.workers <= 0:
            raise DomainError(f"workers must be positive, got {self.workers}")


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def _parse_params(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise DomainError(f"cannot parse parameters {text!r}; "
                          "expected an integer or two comma-separated integers") from None


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _vertex_witness_json(w: VertexColoring) -> str:
    return json.dumps({"colors": w.num_colors, "assignment": list(w.color_of)}) + "\n"


def _edge_witness_json(w: EdgeColoring) -> str:
    triples = [[u, v, c] for u, v, c in w.assignment()]
    return json.dumps({"colors": w.num_colors, "assignment": triples}) + "\n"


def cmd_family(args) -> int:
    g = families.make(args.name, *_parse_params(args.params))
    _emit(format_edge_list(g), args.out)
    return EXIT_OK


def cmd_linegraph(args) -> int:
    g = read_edge_list(args.file)
    _emit(format_edge_list(line_graph(g).graph), args.out)
    return EXIT_OK


def cmd_chi(args) -> int:
    g = read_edge_list(args.file)
    w = chromatic_number(g, args.budget)
    if args.format == "json":
        sys.stdout.write(_vertex_witness_json(w))
    else:
        print(w.num_colors)
    return EXIT_OK


def cmd_chi_index(args) -> int:
    g = read_edge_list(args.file)
    w = chromatic_index(g, args.budget)
    if args.format == "json":
        sys.stdout.write(_edge_witness_json(w))
    else:
        print(w.num_colors)
    return EXIT_OK


def _family_param_from_order(name: str, g: Graph) -> int:
    if name == "complete":
        return g.order
    if name == "wheel":
        return g.order
    if name == "helm":
        if g.order % 2 == 0:
            raise DomainError(f"a helm graph has odd order 2n+1, got order {g.order}")
        return (g.order - 1) // 2
    if name == "fan":
        return g.order - 1
    raise DomainError(f"method {name!r} has no canonical graph")


def _resolve_edge_color_input(args) -> Graph:
    if bool(args.file) == bool(args.family):
        raise DomainError("edge-color needs exactly one input: a FILE or --family/--params")
    if args.file:
        return read_edge_list(args.file)
    if not args.params:
        raise DomainError("--family requires --params")
    return families.make(args.family, *_parse_params(args.params))


def cmd_edge_color(args) -> int:
    g = _resolve_edge_color_input(args)
    method = args.method
    if method == "auto":
        method = "konig" if bipartition(g) is not None and g.edges else "misra-gries"
    if method == "konig":
        w = constructions.edge_color_bipartite_konig(g)
    elif method == "misra-gries":
        w = constructions.edge_color_misra_gries(g)
    elif method == "exact":
        w = chromatic_index(g, args.budget)
    else:
        n = _family_param_from_order(method, g)
        if g != families.make(method, n):
            raise DomainError(f"method {method!r} requires the canonical {method} graph "
                              f"in its documented labeling")
        builder = {"complete": constructions.edge_color_complete,
                   "wheel": constructions.edge_color_wheel,
                   "helm": constructions.edge_color_helm,
                   "fan": constructions.edge_color_fan}[method]
        w = builder(n)
    if args.format == "json":
        sys.stdout.write(_edge_witness_json(w))
    else:
        print(w.num_colors)
    return EXIT_OK


def _ng_report_text(r: NgReport) -> str:
    def flag(ok: bool) -> str:
        return "ok" if ok else "VIOLATED"
    n = r.order
    return "\n".join([
        f"order: {n}",
        f"chi: {r.chi}",
        f"chi_complement: {r.chi_comp}",
        f"sum: {r.chi_sum}",
        f"product: {r.chi_product}",
        f"bound sum^2 >= 4n: {flag(r.sum_lower_ok)} ({r.chi_sum * r.chi_sum} >= {4 * n})",
        f"bound sum <= n+1: {flag(r.sum_upper_ok)} ({r.chi_sum} <= {n + 1})",
        f"bound product >= n: {flag(r.product_lower_ok)} ({r.chi_product} >= {n})",
        f"bound 4*product <= (n+1)^2: {flag(r.product_upper_ok)} "
        f"({4 * r.chi_product} <= {(n + 1) ** 2})",
    ]) + "\n"


def cmd_ng(args) -> int:
    if args.ng_command == "check":
        g = read_edge_list(args.file)
        report = ng_check(g, args.budget)
        if args.format == "json":
            payload = {"order": report.order, "chi": report.chi,
                       "chi_complement": report.chi_comp, "sum": report.chi_sum,
                       "product": report.chi_product,
                       "sum_lower_ok": report.sum_lower_ok,
                       "sum_upper_ok": report.sum_upper_ok,
                       "product_lower_ok": report.product_lower_ok,
                       "product_upper_ok": report.product_upper_ok}
            sys.stdout.write(json.dumps(payload) + "\n")
        else:
            sys.stdout.write(_ng_report_text(report))
        return EXIT_OK if report.all_bounds_ok else EXIT_MISMATCH
    if args.ng_command == "feasible":
        print("true" if ng_feasible(args.n, args.a, args.b) else "false")
        return EXIT_OK
    g = ng_construct(args.n, args.a, args.b)
    _emit(format_edge_list(g), args.out)
    return EXIT_OK


#: Order in which ``audit --family all`` runs; bipartite bounds are
#: audited over connected graphs up to order min(max, 5) to keep the
#: default sweep quick (use --family bipartite for larger orders).
_AUDIT_ALL = tuple(claims.AUDIT_FAMILIES) + ("bipartite",)


def cmd_audit(args) -> int:
    targets = _AUDIT_ALL if args.family == "all" else (args.family,)
    executor = None
    rows = []
    try:
        if args.workers > 1:
            executor = ProcessPoolExecutor(max_workers=args.workers)
        for family in targets:
            if family == "bipartite":
                cap = min(args.max, 5) if args.family == "all" else args.max
                rows += claims.audit_bipartite_bounds(cap, args.budget)
            else:
                rows += claims.audit_family(family, args.max, args.budget, executor)
    finally:
        if executor is not None:
            executor.shutdown()
    fmt = "markdown" if args.format in ("text", "markdown") else args.format
    _emit(claims.render_report(rows, fmt), args.out)
    if args.emit_expected:
        with open(args.emit_expected, "w", encoding="utf-8") as fh:
            json.dump(claims.mismatch_keys(rows), fh, indent=2)
            fh.write("\n")
    if any(r.verdict == claims.BUDGET_EXCEEDED for r in rows):
        return EXIT_BUDGET
    mismatches = set(claims.mismatch_keys(rows))
    if args.expected:
        with open(args.expected, "r", encoding="utf-8") as fh:
            expected = set(json.load(fh))
        mismatches -= expected
    return EXIT_MISMATCH if mismatches else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromalab",
        description="Exact graph-coloring toolkit and closed-form claims audit.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("family", help="emit a named family graph as an edge list")
    p.add_argument("--name", required=True, choices=families.FAMILIES)
    p.add_argument("--params", required=True,
                   help="family parameters, e.g. '6' or '2,3'")
    p.add_argument("--out", help="write to a file instead of stdout")
    p.set_defaults(handler=cmd_family)

    p = sub.add_parser("linegraph", help="emit the line graph of an edge-list file")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(handler=cmd_linegraph)

    p = sub.add_parser("chi", help="exact chromatic number of an edge-list file")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--budget", type=_positive_int, default=DEFAULT_NODE_BUDGET)
    p.set_defaults(handler=cmd_chi)

    p = sub.add_parser("chi-index", help="exact chromatic index of an edge-list file")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--budget", type=_positive_int, default=DEFAULT_NODE_BUDGET)
    p.set_defaults(handler=cmd_chi_index)

    p = sub.add_parser("edge-color", help="edge-color a graph by a chosen method")
    p.add_argument("file", nargs="?")
    p.add_argument("--family", choices=families.FAMILIES)
    p.add_argument("--params")
    p.add_argument("--method", default="auto",
                   choices=("auto", "konig", "complete", "wheel", "helm", "fan",
                            "misra-gries", "exact"))
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--budget", type=_positive_int, default=DEFAULT_NODE_BUDGET)
    p.set_defaults(handler=cmd_edge_color)

    p = sub.add_parser("ng", help="Nordhaus-Gaddum checks and constructions")
    ng_sub = p.add_subparsers(dest="ng_command", required=True)
    q = ng_sub.add_parser("check", help="exact bound report for a graph and its complement")
    q.add_argument("file")
    q.add_argument("--format", choices=("text", "json"), default="text")
    q.add_argument("--budget", type=_positive_int, default=DEFAULT_NODE_BUDGET)
    q.set_defaults(handler=cmd_ng)
    q = ng_sub.add_parser("feasible", help="is (chi, chi_complement) = (a, b) realizable at order n?")
    q.add_argument("n", type=int)
    q.add_argument("a", type=int)
    q.add_argument("b", type=int)
    q.set_defaults(handler=cmd_ng)
    q = ng_sub.add_parser("construct", help="build a graph of order n with chi=a, chi_complement=b")
    q.add_argument("n", type=int)
    q.add_argument("a", type=int)
    q.add_argument("b", type=int)
    q.add_argument("--out")
    q.set_defaults(handler=cmd_ng)

    p = sub.add_parser("audit", help="audit registered closed-form claims against exact values")
    p.add_argument("--family", default="all",
                   choices=("all",) + tuple(claims.AUDIT_FAMILIES) + ("bipartite",))
    p.add_argument("--max", type=_positive_int, default=6,
                   help="largest parameter (or bipartite order) to audit")
    p.add_argument("--format", choices=("text", "markdown", "csv", "json"),
                   default="text")
    p.add_argument("--budget", type=_positive_int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("--workers", type=_positive_int, default=1)
    p.add_argument("--expected",
                   help="JSON file with the list of row keys expected to MISMATCH")
    p.add_argument("--emit-expected", dest="emit_expected",
                   help="write the observed MISMATCH row keys as JSON to this file")
    p.add_argument("--out")
    p.set_defaults(handler=cmd_audit)

    return parser


def run(argv=None) -> int:
    """Parse argv and dispatch; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return EXIT_OK if code in (0, None) else EXIT_USAGE
    try:
        CliConfig(subcommand=args.subcommand,
                  format=getattr(args, "format", "text"),
                  budget=getattr(args, "budget", DEFAULT_NODE_BUDGET),
                  workers=getattr(args, "workers", 1))
        return args.handler(args)
    except (DomainError, EdgeListFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
