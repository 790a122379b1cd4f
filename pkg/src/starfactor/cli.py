"""Command-line interface: one JSON document per input graph on stdout.

    starfactor analyze      structural stats plus the uniformity report
    starfactor factors      list star-factors (--limit, --max-star)
    starfactor classify     decide membership via the characterisations
    starfactor census       isomorph-free census of uniform graphs (graph6 list)
    starfactor weight-solve positive edge weights equalising all star-factors

Graphs are read as graph6 (one per line) from the positional arguments or
stdin; ``--format edgelist`` reads a single edge-list graph instead.
Exit codes: 0 success, 2 input error, 3 census disagrees with the expected
membership counts.
"""

from __future__ import annotations

import argparse
import datetime
import json
import logging
import sys
from typing import Iterator, Optional

from . import __version__
from .classifier import EXPECTED_GIRTH3_MEMBERS, Catalog, CatalogError, classify, verify_catalog
from .factors import iter_star_factors
from .graph import (
    INFINITE,
    Graph,
    GraphFormatError,
    girth,
    is_connected,
    leaves_and_stems,
    max_degree,
    min_degree,
    parse_edge_list,
    parse_graph6,
    to_graph6,
)
from .linalg import EliminationLimitError
from .search import Constraints, census_uniform, default_jobs, format_census
from .uniformity import is_uniform, lemma2_witness, lemma3_violation
from .weighting import solve_uniform_weighting

EXIT_OK, EXIT_INPUT, EXIT_DISCREPANCY = 0, 2, 3


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def graph_stats(g: Graph) -> dict:
    leaves, stems = leaves_and_stems(g)
    gi = girth(g)
    return {
        "graph6": to_graph6(g),
        "n": g.n,
        "m": g.m,
        "girth": "infinity" if gi == INFINITE else int(gi),
        "min_degree": min_degree(g) if g.n else None,
        "max_degree": max_degree(g) if g.n else None,
        "connected": is_connected(g),
        "leaves": sorted(leaves),
        "stems": sorted(stems),
    }


def _read_graphs(args, stdin_text: Optional[str] = None) -> Iterator[Graph]:
    try:
        if args.format == "edgelist":
            text = stdin_text if stdin_text is not None else (
                open(args.graphs[0]).read() if args.graphs else sys.stdin.read()
            )
            yield parse_edge_list(text)
            return
        lines = args.graphs or (stdin_text.splitlines() if stdin_text is not None else sys.stdin)
        for line in lines:
            line = line.strip()
            if line and not line.startswith("#"):
                yield parse_graph6(line, strict=args.strict_g6)
    except (GraphFormatError, OSError) as exc:
        raise InputError(str(exc)) from None


def _emit(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, sort_keys=False) + "\n")


def cmd_analyze(args) -> int:
    for g in _read_graphs(args):
        report = is_uniform(g, full=args.full)
        doc = graph_stats(g)
        doc.update(report.to_json())
        doc["lemma2_witness"] = _asdict(lemma2_witness(g))
        doc["lemma3_violation"] = _asdict(lemma3_violation(g))
        _emit(doc)
    return EXIT_OK


def _asdict(w):
    return None if w is None else {k: list(v) if isinstance(v, tuple) else v for k, v in vars(w).items()}


def cmd_factors(args) -> int:
    for g in _read_graphs(args):
        factors = []
        truncated = False
        for f in iter_star_factors(g, args.max_star):
            if args.limit is not None and len(factors) >= args.limit:
                truncated = True
                break
            factors.append(f)
        if not truncated and args.limit is None:
            factors.sort(key=lambda f: f.sorted_edges())
        doc = graph_stats(g)
        doc.update({
            "count": len(factors),
            "truncated": truncated,
            "factors": [dict(f.to_json(), weight=f.size) for f in factors],
        })
        _emit(doc)
    return EXIT_OK


def cmd_classify(args) -> int:
    stdin_text = None
    try:
        if args.catalog == "-":
            # stdin doubles as catalog and as the graphs to classify
            stdin_text = sys.stdin.read()
            catalog = Catalog.from_text(stdin_text)
            verify_catalog(catalog)
        elif args.catalog:
            catalog = Catalog.load(args.catalog)
        else:
            catalog = Catalog.load()
    except (CatalogError, OSError) as exc:
        raise InputError(f"catalog: {exc}") from None
    for g in _read_graphs(args, stdin_text):
        doc = graph_stats(g)
        doc.update(classify(g, catalog).to_json())
        _emit(doc)
    return EXIT_OK


def cmd_census(args) -> int:
    if args.n_max > 10:
        raise InputError("--n-max is limited to 10")
    c = Constraints(
        min_degree=args.min_degree,
        girth_exact=args.girth,
        girth_min=args.girth_min,
        connected=args.connected,
    )
    if args.n_max > 9:
        logging.getLogger(__name__).warning("n_max > 9 is experimental")
    found = census_uniform(args.n_max, c, jobs=args.jobs, prune_lemmas=args.prune_lemmas)
    graphs = [g for g, _ in found]
    header = []
    if args.prune_lemmas:
        header.append("lemma pruning: on")
    discrepancy = _census_discrepancy(graphs, args.n_max, c)
    if discrepancy:
        header.append(f"DISCREPANCY: {discrepancy}")
    if args.stamp_date:
        header.append(f"date: {datetime.date.today().isoformat()}")
    text = format_census(graphs, args.n_max, c, header)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if discrepancy:
        sys.stderr.write(json.dumps({"discrepancy": discrepancy}) + "\n")
        return EXIT_DISCREPANCY
    return EXIT_OK


def _census_discrepancy(graphs: list[Graph], n_max: int, c: Constraints) -> Optional[str]:
    """Compare a census against the known characterisations when its constraints match them."""
    if not c.connected or c.min_degree != 2:
        return None
    if c.girth_exact == 3 and n_max >= 9 and len(graphs) != EXPECTED_GIRTH3_MEMBERS:
        return f"found {len(graphs)} girth-3 uniform graphs, expected {EXPECTED_GIRTH3_MEMBERS}"
    if c.girth_min is not None and c.girth_min >= 5 and n_max >= 7:
        sizes = sorted(g.n for g in graphs)
        expected = [k for k in (5, 7) if k >= c.girth_min]
        if sizes != expected or any(g.m != g.n or min_degree(g) != 2 for g in graphs):
            return f"found {len(graphs)} graphs of girth >= {c.girth_min}, expected cycles {expected}"
    return None


def cmd_weight_solve(args) -> int:
    for g in _read_graphs(args):
        try:
            sol = solve_uniform_weighting(g, factor_cap=args.factor_cap)
        except EliminationLimitError as exc:
            raise InputError(str(exc)) from None
        doc = graph_stats(g)
        doc.update(sol.to_json())
        _emit(doc)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("graphs", nargs="*", help="graph6 strings (default: read stdin)")
    common.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    common.add_argument("--strict-g6", action="store_true", help="reject nonzero graph6 padding")

    parser = _Parser(prog="starfactor", description="Star-factor uniformity toolkit")
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("analyze", parents=[common], help="stats and uniformity report")
    p.add_argument("--full", action="store_true", help="enumerate every factor")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("factors", parents=[common], help="list star-factors")
    p.add_argument("--limit", type=int, default=None, help="stop after this many factors")
    p.add_argument("--max-star", type=int, default=None, help="at most this many leaves per star")
    p.set_defaults(func=cmd_factors)

    p = sub.add_parser("classify", parents=[common], help="membership via the characterisations")
    p.add_argument("--catalog", default=None, help="catalog file, or '-' to read it from stdin")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("census", help="isomorph-free census of uniform graphs")
    girth_group = p.add_mutually_exclusive_group()
    girth_group.add_argument("--girth", type=int, default=None, help="exact girth")
    girth_group.add_argument("--girth-min", type=int, default=None)
    p.add_argument("--min-degree", type=int, default=0)
    p.add_argument("--n-max", type=int, default=9)
    p.add_argument("--connected", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--jobs", type=int, default=default_jobs())
    p.add_argument("--prune-lemmas", action="store_true", help="skip graphs with a lemma witness")
    p.add_argument("--stamp-date", action="store_true", help="record today's date in the header")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("weight-solve", parents=[common], help="solve the star-weighting problem")
    p.add_argument("--factor-cap", type=int, default=100_000)
    p.set_defaults(func=cmd_weight_solve)
    return parser


def run(argv: Optional[list[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if not getattr(args, "command", None):
            raise InputError("missing subcommand (analyze, factors, classify, census, weight-solve)")
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
        return args.func(args)
    except InputError as exc:
        sys.stderr.write(json.dumps({"error": str(exc)}) + "\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
