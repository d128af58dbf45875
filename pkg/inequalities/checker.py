"""
Inequality Suite Runner

Draws seeded random instances for each inequality and collects the reports:
- main: tree vs pure-star bound
- star-holder: Hölder bound for mixed stars plus its max form
- geom-mean: one leaf-reallocation step
- tail: weighted and unweighted tail bounds (records the largest observed ratio)
- envelope: pointwise Hölder envelope with per-arc exponents
- weighted / mv-path: bounds over rational matrices
- moments: moment domination, embedding moment and truncation domination
- exploration: worst tree on k vertices vs the pure-star bound

Instance i of a suite depends only on (suite, seed, i), so sharding over
workers never changes the result.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from digraph.enumerate import index_chunks
from digraph.formats import matrix_literal, tree_literal
from models.generators import (
    instance_rng,
    random_digraph,
    random_nonneg_matrix,
    random_tree,
    random_weights,
)

from .matrix import check_mv_path, check_weighted_tree
from .moments import check_embedding_moment, check_moment_domination, check_truncation_domination
from .report import BoundReport
from .sidorenko import check_geometric_mean, check_main_theorem, check_star_holder, check_star_max_form, skeleton_leaves
from .tail import check_pointwise_envelope, check_tail_theorem, check_tail_unweighted, tail_ratio

logger = logging.getLogger(__name__)

SUITES = (
    "main",
    "star-holder",
    "geom-mean",
    "tail",
    "envelope",
    "weighted",
    "mv-path",
    "moments",
    "exploration",
)

ENVELOPE_EXPONENTS = (Fraction(1), Fraction(3, 2), Fraction(2), Fraction(4))

Instance = Tuple[List[BoundReport], Dict[str, Any]]


@dataclass
class SuiteResult:
    """Outcome of one seeded suite."""
    suite: str
    size: int
    seed: int
    reports: int = 0
    violations: List[Dict[str, Any]] = field(default_factory=list)
    worst_slack: Optional[float] = None
    stats: Dict[str, Any] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "size": self.size,
            "seed": self.seed,
            "reports": self.reports,
            "holds": self.holds,
            "worst_slack": self.worst_slack,
            "violations": self.violations,
            "stats": {k: str(v) if isinstance(v, Fraction) else v for k, v in self.stats.items()},
        }


def _host_info(host) -> Dict[str, Any]:
    return {"host": matrix_literal(host)}


def _main(rng) -> Instance:
    tree = random_tree(rng.randint(1, 7), rng)
    host = random_digraph(10, rng)
    return [check_main_theorem(tree, host)], {"tree": tree_literal(tree), **_host_info(host)}


def _star_holder(rng) -> Instance:
    n = rng.randint(1, 5)
    k = rng.randint(0, n)
    host = random_digraph(8, rng)
    reports = [check_star_holder(n, k, host), check_star_max_form(n, k, host)]
    return reports, {"n": n, "k": k, **_host_info(host)}


def _geom_mean(rng) -> Instance:
    while True:
        tree = random_tree(rng.randint(4, 6), rng)
        leaves = skeleton_leaves(tree)
        if len(leaves) >= 2:
            break
    a, b = rng.sample(leaves, 2)
    host = random_digraph(5, rng)
    report = check_geometric_mean(tree, a, b, host)
    return [report], {"tree": tree_literal(tree), "a": a, "b": b, **_host_info(host)}


def _tail(rng) -> Instance:
    tree = random_tree(rng.randint(1, 5), rng)
    host = random_digraph(6, rng)
    delta = rng.randint(0, 6)
    alpha = random_weights(tree.k, rng)
    info = {"tree": tree_literal(tree), "delta": delta, **_host_info(host)}
    ratio = tail_ratio(tree, host, delta, alpha)
    if ratio is not None:
        info["tail_ratio"] = ratio
    return [check_tail_theorem(tree, host, delta, alpha), check_tail_unweighted(tree, host, delta)], info


def _envelope(rng) -> Instance:
    tree = random_tree(rng.randint(1, 5), rng)
    host = random_digraph(6, rng)
    exponents = {c: rng.choice(ENVELOPE_EXPONENTS) for c in range(1, tree.k)}
    reports = check_pointwise_envelope(tree, host, exponents)
    return reports, {"tree": tree_literal(tree), "exponents": {c: str(p) for c, p in exponents.items()}, **_host_info(host)}


def _weighted(rng) -> Instance:
    tree = random_tree(rng.randint(1, 5), rng)
    matrix = random_nonneg_matrix(rng.randint(1, 4), rng)
    return [check_weighted_tree(tree, matrix)], {"tree": tree_literal(tree), "matrix": matrix.to_rows()}


def _mv_path(rng) -> Instance:
    p = rng.randint(1, 3)
    matrix = random_nonneg_matrix(rng.randint(1, 4), rng)
    report = check_mv_path(p, matrix)
    info = {"p": p, "matrix": matrix.to_rows(), "below_max_bound": report.lhs <= report.details["max_bound"]}
    return [report], info


def _moments(rng) -> Instance:
    tree = random_tree(rng.randint(1, 5), rng)
    host = random_digraph(8, rng)
    delta = rng.randint(0, 8)
    reports = [
        check_moment_domination(tree, host),
        check_embedding_moment(tree, host),
        check_truncation_domination(tree, host, delta),
    ]
    return reports, {"tree": tree_literal(tree), "delta": delta, **_host_info(host)}


def _exploration(rng) -> Instance:
    from models.degree import exploration_bound_report

    k = rng.randint(2, 4)
    host = random_digraph(8, rng)
    return [exploration_bound_report(host, k)], {"k": k, **_host_info(host)}


_BUILDERS = {
    "main": _main,
    "star-holder": _star_holder,
    "geom-mean": _geom_mean,
    "tail": _tail,
    "envelope": _envelope,
    "weighted": _weighted,
    "mv-path": _mv_path,
    "moments": _moments,
    "exploration": _exploration,
}


def _run_chunk(suite: str, seed: int, start: int, stop: int) -> Dict[str, Any]:
    """Run instances [start, stop) of a suite; the merge-friendly partial result."""
    build = _BUILDERS[suite]
    partial: Dict[str, Any] = {"reports": 0, "violations": [], "slacks": [], "tail_ratio": None, "below_max": True}
    for i in range(start, stop):
        reports, info = build(instance_rng(seed, i, salt=suite))
        partial["reports"] += len(reports)
        for report in reports:
            partial["slacks"].append(float(report.slack))
            if not report.holds:
                partial["violations"].append({"index": i, "report": report.to_dict(), "instance": _plain(info)})
        ratio = info.get("tail_ratio")
        if ratio is not None and (partial["tail_ratio"] is None or ratio > partial["tail_ratio"]):
            partial["tail_ratio"] = ratio
        if info.get("below_max_bound") is False:
            partial["below_max"] = False
    return partial


def _plain(info: Dict[str, Any]) -> Dict[str, Any]:
    return {k: str(v) if isinstance(v, Fraction) else v for k, v in info.items()}


class InequalityChecker:
    """
    Runs the seeded random suites.

    Suite sizes come from configuration; a suite passes when no report in it
    fails.
    """

    DEFAULT_SUITE_SIZE = 500

    def __init__(self, seed: int = 0, workers: int = 1, suite_sizes: Optional[Dict[str, int]] = None):
        """
        Args:
            seed: Base seed; instance i of suite s uses a generator keyed by (s, seed, i)
            workers: Process count for sharding instances
            suite_sizes: Per-suite instance counts overriding DEFAULT_SUITE_SIZE
        """
        self.seed = seed
        self.workers = max(1, workers)
        self.suite_sizes = dict(suite_sizes or {})

    def run_suite(self, suite: str, size: Optional[int] = None) -> SuiteResult:
        if suite not in _BUILDERS:
            raise ValueError(f"Unknown inequality suite {suite!r}; choose from {', '.join(SUITES)}")
        if size is None:
            size = self.suite_sizes.get(suite, self.DEFAULT_SUITE_SIZE)

        logger.info(f"Running suite {suite}: {size} instances, seed {self.seed}, {self.workers} worker(s)")
        chunks = index_chunks(size, self.workers)
        if self.workers > 1 and len(chunks) > 1:
            with ProcessPoolExecutor(max_workers=len(chunks)) as ex:
                futs = [ex.submit(_run_chunk, suite, self.seed, start, stop) for start, stop in chunks]
                partials = [fut.result() for fut in futs]
        else:
            partials = [_run_chunk(suite, self.seed, start, stop) for start, stop in chunks]

        result = SuiteResult(suite=suite, size=size, seed=self.seed)
        slacks: List[float] = []
        for part in partials:
            result.reports += part["reports"]
            result.violations.extend(part["violations"])
            slacks.extend(part["slacks"])
            ratio = part["tail_ratio"]
            if ratio is not None and ratio > result.stats.get("max_tail_ratio", Fraction(-1)):
                result.stats["max_tail_ratio"] = ratio
            if suite == "mv-path":
                result.stats["below_max_bound"] = result.stats.get("below_max_bound", True) and part["below_max"]
        if slacks:
            result.worst_slack = min(slacks)

        if result.holds:
            logger.info(f"Suite {suite}: {result.reports} reports, all hold")
        else:
            logger.error(f"Suite {suite}: {len(result.violations)} violation(s) in {result.reports} reports")
        return result

    def run_all(self, size: Optional[int] = None) -> List[SuiteResult]:
        return [self.run_suite(suite, size) for suite in SUITES]
