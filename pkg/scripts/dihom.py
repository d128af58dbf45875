#!/usr/bin/env python3
"""
dihom command line

Counts tree homomorphisms, checks the tree-count inequalities, searches the
homomorphism order over small hosts and evaluates step kernels.

Usage:
    python scripts/dihom.py count --tree "P +++" --host app5.mat
    python scripts/dihom.py check --inequality main --suite 500 --seed 7
    python scripts/dihom.py search --family trees-k3 --nmax 4 --reproduce-appendix
    python scripts/dihom.py kernel --op eval --kernel tri.k --pattern "P ++"
    python scripts/dihom.py experiment --name heavy-tail --samples 20000
    python scripts/dihom.py enumerate --what trees --size 3

Exit codes: 0 success, 2 parse or config error, 3 semantic or unexpected error,
4 violated inequality or witness mismatch.
"""

import argparse
import logging
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional

# Add parent directory to path for imports when running as script
script_dir = os.path.dirname(os.path.abspath(__file__))
project_root = os.path.dirname(script_dir)
if project_root not in sys.path:
    sys.path.insert(0, project_root)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_SEMANTIC = 3
EXIT_VIOLATION = 4


def setup_logging(verbose: bool = False) -> None:
    """Configure logging."""
    level = logging.DEBUG if verbose else logging.INFO
    logging.basicConfig(
        level=level,
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
        stream=sys.stderr,
    )


class Emitter:
    """Writes one result document as text or JSON, to stdout or a file."""

    def __init__(self, config, output: Optional[str] = None):
        self.config = config
        self.output = output

    @property
    def json(self) -> bool:
        return self.config.output == "json"

    def emit(self, kind: str, body: Dict[str, Any], text: str) -> None:
        from output import to_json

        if self.json:
            rendered = to_json(kind, body, schema=self.config.schema)
        else:
            rendered = text
        if self.output:
            Path(self.output).parent.mkdir(parents=True, exist_ok=True)
            with open(self.output, "w", encoding="utf-8") as f:
                f.write(rendered + "\n")
            print(f"Results written to {self.output}")
        else:
            print(rendered)


# ---------------------------------------------------------------------------
# Input helpers


def _load_tree(args):
    from digraph.formats import ParseError, parse_tree

    if not args.tree:
        raise ParseError("A tree pattern is required (--tree)")
    return parse_tree(args.tree)


def _load_host(args):
    from digraph.formats import ParseError, load_digraph

    if not args.host:
        raise ParseError("A host file is required (--host)")
    return load_digraph(args.host)


def _parse_fraction(text: str, what: str) -> Fraction:
    from digraph.formats import ParseError

    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"{what} must be a rational such as 3/2, got {text!r}")


def _parse_alpha(text: Optional[str], k: int):
    from digraph.formats import ParseError
    from homcount.tree import WeightVector

    if text is None:
        return None
    values = [_parse_fraction(t, "alpha entry") for t in text.replace(",", " ").split()]
    if len(values) == 1 and k > 1:
        values = values * k
    if len(values) != k:
        raise ParseError(f"--alpha needs {k} entries (or one shared entry), got {len(values)}")
    return WeightVector.of(values)


def _parse_exponents(args):
    """--exponent p for every arc, or --exponents child:p,child:p."""
    from digraph.formats import ParseError

    if args.exponents:
        result = {}
        for part in args.exponents.split(","):
            child, _, p = part.partition(":")
            try:
                result[int(child)] = _parse_fraction(p, "exponent")
            except ValueError:
                raise ParseError(f"Malformed exponent entry {part!r}; expected child:p")
        return result
    return _parse_fraction(args.exponent, "exponent")


def _load_pattern(text: str):
    """A tree literal, or a digraph file."""
    from digraph.formats import ParseError, load_digraph, parse_tree

    if Path(text).is_file():
        return load_digraph(text)
    try:
        return parse_tree(text).to_digraph()
    except ParseError:
        raise ParseError(f"Pattern {text!r} is neither a tree literal nor a readable file")


# ---------------------------------------------------------------------------
# Subcommands


def cmd_count(args, config, out: Emitter) -> int:
    from digraph.formats import load_digraph, matrix_literal, tree_literal
    from homcount import hom_components, hom_rooted, hom_tail, hom_tree, hom_weighted, load_nonneg_matrix

    logger = logging.getLogger(__name__)

    if args.weighted:
        tree = _load_tree(args)
        matrix = load_nonneg_matrix(args.host)
        value = hom_weighted(tree, matrix)
        body = {"pattern": tree_literal(tree), "host": matrix.to_rows(), "count": str(value)}
        out.emit("count", body, str(value))
        return EXIT_OK

    host = _load_host(args)
    if args.pattern:
        pattern = load_digraph(args.pattern)
        value = hom_components(pattern, host)
        pattern_text = matrix_literal(pattern)
    else:
        tree = _load_tree(args)
        pattern_text = tree_literal(tree)
        if args.rooted is not None:
            value = hom_rooted(tree, host, args.rooted)
        elif args.tail is not None:
            tail = hom_tail(tree, host, args.tail, _parse_alpha(args.alpha, tree.k))
            value = tail.value
            if not tail.exact:
                logger.info("Fractional alpha: tail count is a float")
        else:
            value = hom_tree(tree, host)

    body = {"pattern": pattern_text, "host": matrix_literal(host), "count": str(value)}
    if args.rooted is not None:
        body["root_image"] = args.rooted
    if args.tail is not None:
        body["delta"] = args.tail
    out.emit("count", body, str(value))
    return EXIT_OK


def _instance_reports(args):
    """(reports, probes, extra) for one explicit instance."""
    from digraph.formats import ParseError
    from homcount import load_nonneg_matrix
    from inequalities import (
        check_embedding_moment, check_geometric_mean, check_main_theorem, check_moment_domination,
        check_mv_path, check_pointwise_envelope, check_star_holder, check_star_max_form,
        check_tail_theorem, check_tail_unweighted, check_truncation_domination, check_weighted_tree,
        probe_weighted_sqrt, reallocation_trace, skeleton_leaves,
    )
    from models import exploration_bound_report

    name = args.inequality
    extra: Dict[str, Any] = {}
    probes = []

    if name in ("weighted", "mv-path"):
        if not args.matrix:
            raise ParseError(f"--inequality {name} needs --matrix")
        matrix = load_nonneg_matrix(args.matrix)
        if name == "mv-path":
            return [check_mv_path(args.p, matrix)], probes, extra
        tree = _load_tree(args)
        probes.append(probe_weighted_sqrt(tree, matrix))
        return [check_weighted_tree(tree, matrix)], probes, extra

    host = _load_host(args)
    if name == "star-holder":
        k = 1 if args.k is None else args.k
        return [check_star_holder(args.n, k, host), check_star_max_form(args.n, k, host)], probes, extra
    if name == "exploration":
        return [exploration_bound_report(host, 2 if args.k is None else args.k)], probes, extra

    tree = _load_tree(args)
    if name == "main":
        return [check_main_theorem(tree, host)], probes, extra
    if name == "geom-mean":
        if args.trace:
            trace = reallocation_trace(tree, host)
            extra["trace"] = trace.to_dict()
            return [s.report for s in trace.steps] + [trace.final_report], probes, extra
        leaves = skeleton_leaves(tree)
        a = args.a if args.a is not None else (leaves[0] if len(leaves) >= 2 else None)
        b = args.b if args.b is not None else (leaves[1] if len(leaves) >= 2 else None)
        if a is None or b is None:
            raise ValueError("The tree has fewer than two skeleton leaves; pass --a and --b")
        return [check_geometric_mean(tree, a, b, host)], probes, extra
    if name == "tail":
        alpha = _parse_alpha(args.alpha, tree.k)
        return [check_tail_theorem(tree, host, args.delta, alpha), check_tail_unweighted(tree, host, args.delta)], probes, extra
    if name == "envelope":
        return check_pointwise_envelope(tree, host, _parse_exponents(args)), probes, extra
    if name == "moments":
        return [
            check_moment_domination(tree, host),
            check_embedding_moment(tree, host),
            check_truncation_domination(tree, host, args.delta),
        ], probes, extra
    raise ValueError(f"Unknown inequality {name!r}")


def cmd_check(args, config, out: Emitter) -> int:
    from inequalities import GUARD_BAND, SUITES, InequalityChecker
    from output import format_suites, to_text

    if args.suite is not None:
        suites = list(SUITES) if args.inequality == "all" else [args.inequality]
        checker = InequalityChecker(seed=args.seed, workers=config.workers, suite_sizes=config.suite_sizes)
        size = args.suite if args.suite > 0 else None
        results = [checker.run_suite(s, size if size is not None else config.suite_size(s)) for s in suites]
        body = {"guard_band": GUARD_BAND, "suites": [r.to_dict() for r in results]}
        out.emit("check", body, format_suites(results))
        return EXIT_OK if all(r.holds for r in results) else EXIT_VIOLATION

    if args.inequality == "all":
        raise ValueError("--inequality all needs --suite")
    reports, probes, extra = _instance_reports(args)
    body = {
        "inequality": args.inequality,
        "guard_band": GUARD_BAND,
        "reports": [r.to_dict() for r in reports],
        "holds": all(r.holds for r in reports),
    }
    if probes:
        body["probes"] = [p.to_dict() for p in probes]
    body.update(extra)
    text = to_text(reports, title=f"CHECK {args.inequality.upper()}")
    if probes:
        text += "\n" + to_text(probes, title="PROBES (data only)")
    out.emit("check", body, text)
    return EXIT_OK if body["holds"] else EXIT_VIOLATION


def cmd_search(args, config, out: Emitter) -> int:
    from digraph.formats import parse_tree
    from output import format_appendix, format_verdicts
    from search import PairVerdict, compare_maxorder, compare_over_hosts, family_trees, reproduce_appendix_table, sweep_family

    logger = logging.getLogger(__name__)
    body: Dict[str, Any] = {}
    texts: List[str] = []

    if args.reproduce_appendix:
        result = reproduce_appendix_table()
        body["appendix"] = result.to_dict()
        texts.append(format_appendix(result))

    verdicts: List[PairVerdict] = []
    if args.pair:
        a, b = parse_tree(args.pair[0]), parse_tree(args.pair[1])
        compare = compare_maxorder if args.maxorder else compare_over_hosts
        verdicts = [PairVerdict(a, b, compare(a, b, args.nmax, config.workers))]
    elif args.family:
        trees = family_trees(args.family, args.h)
        verdicts = sweep_family(trees, args.nmax, config.workers, maxorder=args.maxorder)
    elif not args.reproduce_appendix:
        raise ValueError("search needs --family, --pair or --reproduce-appendix")

    bad = [pv for pv in verdicts if pv.verdict.witness is not None and not pv.verdict.witness.recompute()]
    for pv in bad:
        logger.error(f"Witness for {pv.to_dict()['pair']} does not recompute")

    if verdicts:
        body["maxorder"] = args.maxorder
        body["n_max"] = args.nmax
        body["verdicts"] = [pv.to_dict() for pv in verdicts]
        texts.append(format_verdicts(verdicts))

    out.emit("search", body, "\n\n".join(texts))
    return EXIT_VIOLATION if bad else EXIT_OK


def _default_kernel():
    from digraph.graph import Digraph
    from kernels import step_kernel_of_host

    return step_kernel_of_host(Digraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)]))


def cmd_kernel(args, config, out: Emitter) -> int:
    from digraph.formats import matrix_literal
    from kernels import config_product, load_kernel, mc_density_check

    kernel = load_kernel(args.kernel) if args.kernel else _default_kernel()
    pattern = _load_pattern(args.pattern)

    if args.op == "eval":
        value = config_product(pattern, kernel)
        body = {"pattern": matrix_literal(pattern), "kernel": kernel.to_dict(), "U": str(value)}
        out.emit("kernel", body, str(value))
        return EXIT_OK

    check = mc_density_check(
        pattern, kernel, args.n, args.trials,
        seed=args.seed,
        workers=config.workers,
        standard_errors=config.mc_standard_errors,
        slack=config.mc_slack,
        rerun_factor=config.mc_rerun_factor,
    )
    body = {"pattern": matrix_literal(pattern), "kernel": kernel.to_dict(), **check.to_dict()}
    text = (
        f"mean t = {check.mean_t:.6f} (tolerance {check.tolerance:.6f})\n"
        f"mean injective = {check.mean_inj:.6f} (tolerance {check.tolerance_inj:.6f})\n"
        f"U = {check.exact}  {'within tolerance' if check.holds else 'OUTSIDE tolerance'}"
        + ("  [rerun]" if check.rerun else "")
    )
    out.emit("kernel", body, text)
    return EXIT_OK if check.holds else EXIT_VIOLATION


def cmd_experiment(args, config, out: Emitter) -> int:
    from models import degree_moment_summary, heavy_tail_experiment

    if args.name == "degree-moments":
        host = _load_host(args)
        summary = degree_moment_summary(host, args.h)
        body = summary.to_dict()
        out.emit("experiment", body, "\n".join(f"{k}: {v}" for k, v in body.items()))
        return EXIT_OK if summary.sandwich_holds() else EXIT_VIOLATION

    report = heavy_tail_experiment(
        args.d_root,
        _parse_fraction(args.tail_exponent, "tail exponent"),
        _parse_fraction(args.r, "r"),
        _parse_fraction(args.p, "p"),
        args.samples,
        args.seed,
        truncation=config.heavy_tail_truncation,
        slack=config.heavy_tail_slack,
    )
    body = report.to_dict()
    out.emit("experiment", body, "\n".join(f"{k}: {v}" for k, v in body.items()))
    return EXIT_OK if report.holds else EXIT_VIOLATION


def cmd_enumerate(args, config, out: Emitter) -> int:
    from digraph.enumerate import enumerate_directed_trees, enumerate_hosts
    from digraph.formats import tree_literal

    if args.what == "trees":
        items = [tree_literal(t) for t in enumerate_directed_trees(args.size)]
    else:
        items = [
            "".join(str(x) for row in g.matrix() for x in row)
            for g in enumerate_hosts(args.size, canonical=args.canonical)
        ]
    body = {"what": args.what, "size": args.size, "count": len(items), "items": items}
    out.emit("enumerate", body, "\n".join(items))
    return EXIT_OK


COMMANDS = {
    "count": cmd_count,
    "check": cmd_check,
    "search": cmd_search,
    "kernel": cmd_kernel,
    "experiment": cmd_experiment,
    "enumerate": cmd_enumerate,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Tree homomorphism counts, bounds and order searches on small digraphs"
    )
    parser.add_argument("-c", "--config", help="User config file merged over config/defaults.yaml")
    parser.add_argument("-w", "--workers", type=int, help="Worker processes (DIHOM_WORKERS overrides)")
    parser.add_argument("--json", action="store_true", help="Emit a JSON document instead of text")
    parser.add_argument("-o", "--output", help="Write the result to a file instead of stdout")
    parser.add_argument("-v", "--verbose", action="store_true", help="Enable verbose output")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="Count homomorphisms of a pattern into a host")
    p.add_argument("--tree", help='Tree literal: "S a b", "P +-+" or "0>1,2>1"')
    p.add_argument("--pattern", help="Pattern digraph file (any digraph)")
    p.add_argument("--host", required=True, help="Host digraph file (rational matrix with --weighted)")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--rooted", type=int, help="Pin the tree root to this host vertex")
    mode.add_argument("--tail", type=int, help="Tail threshold: root images of total degree >= DELTA")
    p.add_argument("--alpha", help="Degree-power weights, one per tree vertex (or one shared)")
    p.add_argument("--weighted", action="store_true", help="Host is a nonnegative rational matrix")

    p = sub.add_parser("check", help="Evaluate an inequality on an instance or a seeded suite")
    p.add_argument(
        "--inequality", required=True,
        choices=["main", "star-holder", "geom-mean", "tail", "envelope", "weighted",
                 "mv-path", "moments", "exploration", "all"],
    )
    p.add_argument("--suite", type=int, help="Run a seeded suite of N instances (0: configured size)")
    p.add_argument("--seed", type=int, help="Suite seed (default: configured seed)")
    p.add_argument("--tree", help="Tree literal")
    p.add_argument("--host", help="Host digraph file")
    p.add_argument("--matrix", help="Rational matrix file")
    p.add_argument("--p", type=int, default=1, help="Path length for mv-path")
    p.add_argument("--n", type=int, default=3, help="Star size for star-holder")
    p.add_argument(
        "--k", type=int,
        help="Out-leaves for star-holder (default 1); tree size for exploration (default 2)",
    )
    p.add_argument("--a", type=int, help="First skeleton leaf for geom-mean")
    p.add_argument("--b", type=int, help="Second skeleton leaf for geom-mean")
    p.add_argument("--trace", action="store_true", help="Follow leaf reallocation down to a star")
    p.add_argument("--delta", type=int, default=0, help="Degree threshold for tail and moments")
    p.add_argument("--alpha", help="Degree-power weights for tail")
    p.add_argument("--exponent", default="2", help="Envelope exponent used on every arc")
    p.add_argument("--exponents", help="Per-arc envelope exponents as child:p,child:p")

    p = sub.add_parser("search", help="Compare tree patterns over all small hosts")
    p.add_argument("--family", choices=["trees-k3", "trees-k4", "stars-h"])
    p.add_argument("--pair", nargs=2, metavar=("A", "B"), help="Compare two tree literals")
    p.add_argument("--h", type=int, help="Star size for the stars-h family")
    p.add_argument("--nmax", type=int, default=4, help="Largest host size, at most 5")
    p.add_argument("--maxorder", action="store_true", help="Compare against max{hom(B), hom(B reversed)}")
    p.add_argument("--reproduce-appendix", action="store_true", help="Recount the published witness table")

    p = sub.add_parser("kernel", help="Step-kernel products and Monte-Carlo density checks")
    p.add_argument("--op", choices=["eval", "mc"], required=True)
    p.add_argument("--kernel", help="Kernel file (default: directed triangle kernel)")
    p.add_argument("--pattern", default="P ++", help="Tree literal or digraph file (default: P ++)")
    p.add_argument("--n", type=int, default=30, help="Sample size")
    p.add_argument("--trials", type=int, default=500, help="Number of samples")
    p.add_argument("--seed", type=int, help="Sampling seed (default: configured seed)")

    p = sub.add_parser("experiment", help="Probabilistic experiments")
    p.add_argument("--name", choices=["heavy-tail", "degree-moments"], required=True)
    p.add_argument("--d-root", type=int, default=5)
    p.add_argument("--tail-exponent", default="1/2")
    p.add_argument("--r", default="3/10")
    p.add_argument("--p", default="4")
    p.add_argument("--samples", type=int, default=20000)
    p.add_argument("--seed", type=int, help="Sampling seed (default: configured seed)")
    p.add_argument("--host", help="Host digraph file for degree-moments")
    p.add_argument("--h", type=int, default=2, help="Moment order h for degree-moments")

    p = sub.add_parser("enumerate", help="List trees or hosts")
    p.add_argument("--what", choices=["trees", "hosts"], required=True)
    p.add_argument("--size", type=int, required=True, help="Arcs for trees, vertices for hosts")
    p.add_argument("--canonical", action="store_true", help="One host per isomorphism class")

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)

    setup_logging(args.verbose)
    logger = logging.getLogger(__name__)

    # Import here to allow --help to work without dependencies
    from digraph.formats import ParseError
    from inequalities import CounterexampleAlarm
    from search import AppendixMismatch
    from settings import ConfigError, load_config

    try:
        config = load_config(args.config)
        if args.workers is not None and not os.environ.get("DIHOM_WORKERS"):
            config.workers = max(1, args.workers)
        if args.json:
            config.output = "json"
        if getattr(args, "seed", None) is None and hasattr(args, "seed"):
            args.seed = config.seed

        code = COMMANDS[args.command](args, config, Emitter(config, args.output))

    except (ParseError, ConfigError) as e:
        logger.error(f"Input error: {e}")
        code = EXIT_PARSE
    except (CounterexampleAlarm, AppendixMismatch) as e:
        logger.error(f"Violation: {e}")
        code = EXIT_VIOLATION
    except ValueError as e:
        logger.error(f"Error: {e}")
        if args.verbose:
            import traceback
            traceback.print_exc()
        code = EXIT_SEMANTIC
    except Exception as e:
        logger.error(f"Unexpected error: {e}")
        if args.verbose:
            import traceback
            traceback.print_exc()
        code = EXIT_SEMANTIC

    if code == EXIT_VIOLATION:
        logger.error("At least one inequality or witness failed")
    return code


if __name__ == "__main__":
    sys.exit(main())
