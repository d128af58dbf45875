"""
Tree vs pure-star bounds

- check_main_theorem: hom(T,H) <= max{sum deg_out^{k-1}, sum deg_in^{k-1}}
- check_star_holder / check_star_max_form: Hölder bound for mixed stars
- leaf_reallocation_candidates / check_geometric_mean: one leaf-reallocation step
- reallocation_trace: iterate the step until the tree is a star
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Tuple

from digraph.canonical import tree_code
from digraph.formats import tree_literal
from digraph.graph import Digraph
from digraph.trees import RootedDirectedTree, TreeError
from homcount.tree import hom_tree, pendant_split, star_hom

from .report import (
    BoundReport,
    CounterexampleAlarm,
    exact_report,
    float_report,
    from_log,
    weighted_log,
)

logger = logging.getLogger(__name__)


def pure_star_sums(host: Digraph, power: int) -> Tuple[int, int]:
    """(sum_v deg_in(v)^power, sum_v deg_out(v)^power) with 0^0 = 1."""
    p = host.profile
    return sum(d ** power for d in p.deg_in), sum(d ** power for d in p.deg_out)


def check_main_theorem(tree: RootedDirectedTree, host: Digraph) -> BoundReport:
    lhs = hom_tree(tree, host)
    ins, outs = pure_star_sums(host, tree.k - 1)
    return exact_report(
        "main", lhs, max(ins, outs),
        details={"k": tree.k, "sum_in_pow": ins, "sum_out_pow": outs},
    )


def _check_holder_args(n: int, k: int) -> None:
    if n < 1:
        raise ValueError(f"Star Hölder bound needs n >= 1, got n={n}")
    if not 0 <= k <= n:
        raise ValueError(f"Star Hölder bound needs 0 <= k <= n, got k={k}, n={n}")


def check_star_holder(n: int, k: int, host: Digraph) -> BoundReport:
    """
    star_hom(n-k, k, H) <= X^{(n-k)/n} Y^{k/n}, X = sum deg_in^n, Y = sum deg_out^n.

    The endpoint cases k = 0 and k = n are identities and are reported exactly.
    """
    _check_holder_args(n, k)
    lhs = star_hom(n - k, k, host)
    X, Y = pure_star_sums(host, n)
    details = {"n": n, "k": k, "sum_in_pow": X, "sum_out_pow": Y}

    if k == 0:
        return exact_report("star-holder", lhs, X, details=details)
    if k == n:
        return exact_report("star-holder", lhs, Y, details=details)

    log_rhs = weighted_log([(X, Fraction(n - k, n)), (Y, Fraction(k, n))])
    certified = lhs ** n <= X ** (n - k) * Y ** k
    return float_report(
        "star-holder", lhs, from_log(log_rhs), certified=certified, details=details, log_rhs=log_rhs,
    )


def check_star_max_form(n: int, k: int, host: Digraph) -> BoundReport:
    """star_hom(n-k, k, H) <= max{star_hom(n,0,H), star_hom(0,n,H)}"""
    _check_holder_args(n, k)
    lhs = star_hom(n - k, k, host)
    X, Y = pure_star_sums(host, n)
    return exact_report("star-max", lhs, max(X, Y), details={"n": n, "k": k})


def skeleton_leaves(tree: RootedDirectedTree) -> List[int]:
    """Leaves of the skeleton (T minus its leaves); empty when T is a star."""
    leaves = set(tree.leaves())
    skeleton = [x for x in range(tree.k) if x not in leaves]
    if len(skeleton) < 2:
        return []
    return [
        x for x in skeleton
        if sum(1 for y, _ in tree.neighbors[x] if y not in leaves) == 1
    ]


@dataclass
class ReallocationCandidates:
    """The four trees obtained by moving all m pendant leaves at a and b to one end."""
    a_in: RootedDirectedTree
    a_out: RootedDirectedTree
    b_in: RootedDirectedTree
    b_out: RootedDirectedTree
    i_a: int
    o_a: int
    i_b: int
    o_b: int

    @property
    def m(self) -> int:
        return self.i_a + self.o_a + self.i_b + self.o_b

    def items(self) -> List[Tuple[str, RootedDirectedTree, int]]:
        """(name, tree, exponent) in the order a_in, a_out, b_in, b_out."""
        return [
            ("a_in", self.a_in, self.i_a),
            ("a_out", self.a_out, self.o_a),
            ("b_in", self.b_in, self.i_b),
            ("b_out", self.b_out, self.o_b),
        ]


def leaf_reallocation_candidates(tree: RootedDirectedTree, a: int, b: int) -> ReallocationCandidates:
    """
    Build T_a^in, T_a^out, T_b^in, T_b^out.

    Each is T(a,b) with all removed pendant leaves re-attached to a single
    end in a single orientation, so the arc count is unchanged and the leaf
    count goes up by one.

    Raises:
        TreeError: a == b, or either is not a leaf of the skeleton
    """
    tree.check_vertex(a)
    tree.check_vertex(b)
    if a == b:
        raise TreeError("Leaf reallocation needs two distinct skeleton leaves")
    leaves = skeleton_leaves(tree)
    for x in (a, b):
        if x not in leaves:
            raise TreeError(f"Vertex {x} is not a leaf of the skeleton (skeleton leaves: {leaves})")

    core_arcs, kept, (i_a, o_a, i_b, o_b) = pendant_split(tree, a, b)
    free = [x for x in range(tree.k) if x not in set(kept)]
    root = 0 if 0 in kept else a

    def attach(end: int, incoming: bool) -> RootedDirectedTree:
        arcs = list(core_arcs)
        for x in free:
            arcs.append((x, end) if incoming else (end, x))
        return RootedDirectedTree.from_arcs(tree.k, arcs, root=root)

    return ReallocationCandidates(
        a_in=attach(a, True), a_out=attach(a, False),
        b_in=attach(b, True), b_out=attach(b, False),
        i_a=i_a, o_a=o_a, i_b=i_b, o_b=o_b,
    )


def check_geometric_mean(tree: RootedDirectedTree, a: int, b: int, host: Digraph) -> BoundReport:
    """
    hom(T,H) <= prod_j hom(T_j,H)^{e_j/m}, decided exactly as
    hom(T,H)^m <= prod_j hom(T_j,H)^{e_j}. The max-form corollary
    hom(T,H) <= max_j hom(T_j,H) is recorded in details.

    Raises:
        CounterexampleAlarm: every candidate count is 0 while hom(T,H) > 0
    """
    cands = leaf_reallocation_candidates(tree, a, b)
    lhs = hom_tree(tree, host)
    counts = {name: hom_tree(t, host) for name, t, _ in cands.items()}
    exps = {name: e for name, _, e in cands.items()}
    m = cands.m

    if lhs > 0 and not any(counts.values()):
        logger.error(f"All reallocation candidates vanish while hom(T,H)={lhs}")
        raise CounterexampleAlarm(
            f"geom-mean: all four candidate counts are 0 but hom(T,H)={lhs} for T={tree_literal(tree)}"
        )

    product = 1
    for name in counts:
        product *= counts[name] ** exps[name]
    holds = lhs ** m <= product

    rhs = from_log(weighted_log((counts[name], Fraction(exps[name], m)) for name in counts))
    details: Dict[str, Any] = {
        "a": a,
        "b": b,
        "m": m,
        "exponents": exps,
        "candidate_counts": counts,
        "max_form_holds": lhs <= max(counts.values()),
    }
    return BoundReport(
        label="geom-mean", lhs=lhs, rhs=rhs, holds=holds, slack=rhs - lhs,
        exact=False, details=details,
    )


@dataclass
class TraceStep:
    tree: RootedDirectedTree
    a: int
    b: int
    report: BoundReport
    chosen: str
    next_count: int


@dataclass
class ReallocationTrace:
    """Tree sequence from T to a star, one geometric-mean report per step."""
    steps: List[TraceStep] = field(default_factory=list)
    final_tree: RootedDirectedTree = None
    final_report: BoundReport = None

    @property
    def holds(self) -> bool:
        return all(s.report.holds for s in self.steps) and self.final_report.holds

    def to_dict(self) -> Dict[str, Any]:
        return {
            "steps": [
                {
                    "tree": tree_literal(s.tree),
                    "a": s.a,
                    "b": s.b,
                    "chosen": s.chosen,
                    "report": s.report.to_dict(),
                }
                for s in self.steps
            ],
            "final_tree": tree_literal(self.final_tree),
            "final_report": self.final_report.to_dict(),
            "holds": self.holds,
        }


def reallocation_trace(tree: RootedDirectedTree, host: Digraph) -> ReallocationTrace:
    """
    Repeat leaf reallocation on the two lowest-numbered skeleton leaves, moving
    to the candidate with the largest count (ties by tree code), until a star
    remains. Each step adds a leaf, so at most k - 1 steps are taken.
    """
    trace = ReallocationTrace()
    current = tree
    while True:
        leaves = skeleton_leaves(current)
        if len(leaves) < 2:
            break
        a, b = leaves[0], leaves[1]
        report = check_geometric_mean(current, a, b, host)
        cands = leaf_reallocation_candidates(current, a, b)
        counts = report.details["candidate_counts"]
        name, chosen = min(
            ((n, t) for n, t, _ in cands.items()),
            key=lambda item: (-counts[item[0]], tree_code(item[1])),
        )
        trace.steps.append(TraceStep(current, a, b, report, name, counts[name]))
        logger.debug(f"Reallocated leaves at {a},{b} -> {name} ({counts[name]} homs)")
        current = chosen

    trace.final_tree = current
    trace.final_report = check_main_theorem(current, host)
    return trace
