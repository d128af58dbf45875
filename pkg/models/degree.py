"""
Degree Moments

Exact degree-power means of a host and the tree-family bound they control.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict

from digraph.enumerate import enumerate_directed_trees
from digraph.formats import tree_literal
from digraph.graph import Digraph, DigraphError
from homcount.tree import hom_tree
from inequalities.report import BoundReport

logger = logging.getLogger(__name__)


@dataclass
class DegreeMomentSummary:
    """Means of deg_in^{h-1}, deg_out^{h-1} and d^{h-1} over V(H)."""
    n: int
    h: int
    mean_in_pow: Fraction
    mean_out_pow: Fraction
    mean_total_pow: Fraction

    def sandwich_holds(self) -> bool:
        """in + out <= total <= 2^{h-1} (in + out)"""
        pure = self.mean_in_pow + self.mean_out_pow
        return pure <= self.mean_total_pow <= 2 ** (self.h - 1) * pure

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "h": self.h,
            "mean_in_pow": str(self.mean_in_pow),
            "mean_out_pow": str(self.mean_out_pow),
            "mean_total_pow": str(self.mean_total_pow),
        }


def degree_moment_summary(host: Digraph, h: int) -> DegreeMomentSummary:
    if h < 2:
        raise ValueError(f"Degree moments need h >= 2, got {h}")
    if host.n == 0:
        raise DigraphError("Degree moments need a nonempty host")
    e = h - 1
    p = host.profile
    return DegreeMomentSummary(
        n=host.n,
        h=h,
        mean_in_pow=Fraction(sum(d ** e for d in p.deg_in), host.n),
        mean_out_pow=Fraction(sum(d ** e for d in p.deg_out), host.n),
        mean_total_pow=Fraction(sum(d ** e for d in p.total), host.n),
    )


def exploration_bound_report(host: Digraph, k: int) -> BoundReport:
    """
    Worst case of hom(T,H) <= max{sum deg_in^{k-1}, sum deg_out^{k-1}} over
    every directed tree T on k vertices. Also reports the bound divided by
    |V(H)|, the chance that a uniform root sees a given pattern count.
    """
    if k < 2:
        raise ValueError(f"Exploration bound needs k >= 2, got {k}")
    p = host.profile
    rhs = max(sum(d ** (k - 1) for d in p.deg_in), sum(d ** (k - 1) for d in p.deg_out))

    per_tree = {}
    worst = 0
    for tree in enumerate_directed_trees(k - 1):
        count = hom_tree(tree, host)
        per_tree[tree_literal(tree)] = count
        worst = max(worst, count)

    details = {
        "k": k,
        "trees": len(per_tree),
        "counts": per_tree,
        "normalised_bound": Fraction(rhs, host.n) if host.n else Fraction(0),
    }
    return BoundReport(
        label="exploration", lhs=worst, rhs=rhs, holds=worst <= rhs, slack=rhs - worst, details=details,
    )
