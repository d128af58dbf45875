"""
Order Verdicts

Result types for comparing two tree patterns over all hosts up to a size.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Dict, Optional, Tuple

from digraph.formats import matrix_literal, tree_literal
from digraph.graph import Digraph
from digraph.trees import RootedDirectedTree
from homcount.general import hom_general

logger = logging.getLogger(__name__)


class VerdictKind(str, Enum):
    INCOMPARABLE = "incomparable"
    DOMINATES = "dominates"    # hom(A) >= hom(B) everywhere searched, once strictly
    DOMINATED = "dominated"    # hom(A) <= hom(B) everywhere searched, once strictly
    EQUAL = "equal"


@dataclass(frozen=True)
class HostWitness:
    """A host with the pair of counts it produced."""
    host: Digraph
    counts: Tuple[int, int]
    index: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        result = {
            "n": self.host.n,
            "matrix": matrix_literal(self.host),
            "bits": "".join(str(x) for row in self.host.matrix() for x in row),
            "counts": [str(c) for c in self.counts],
        }
        if self.index is not None:
            result["index"] = self.index
        return result


@dataclass(frozen=True)
class WitnessRecord:
    """Hosts certifying hom(A) > hom(B) and hom(A) < hom(B)."""
    a: RootedDirectedTree
    b: RootedDirectedTree
    host_gt: HostWitness
    host_lt: HostWitness
    maxorder: bool = False

    def recompute(self) -> bool:
        """Recount both hosts from scratch with the general counter and check strictness."""
        count = _pair_counter(self.a, self.b, self.maxorder, hom_general)
        gt = count(self.host_gt.host)
        lt = count(self.host_lt.host)
        return (
            gt == tuple(self.host_gt.counts)
            and lt == tuple(self.host_lt.counts)
            and gt[0] > gt[1]
            and lt[0] < lt[1]
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "pair": [tree_literal(self.a), tree_literal(self.b)],
            "host_gt": self.host_gt.to_dict(),
            "host_lt": self.host_lt.to_dict(),
        }


@dataclass(frozen=True)
class OrderVerdict:
    kind: VerdictKind
    n_max: int
    witness: Optional[WitnessRecord] = None

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {"verdict": self.kind.value, "n_max": self.n_max}
        if self.witness is not None:
            result["witness"] = self.witness.to_dict()
        return result


def _pair_counter(
    a: RootedDirectedTree,
    b: RootedDirectedTree,
    maxorder: bool,
    counter: Callable,
) -> Callable[[Digraph], Tuple[int, int]]:
    """
    Counts (hom(A,H), hom(B,H)); under the max order the second entry is
    max{hom(B,H), hom(B^rev,H)}.
    """
    da, db = a.to_digraph(), b.to_digraph()
    drev = b.reverse().to_digraph()

    def count(host: Digraph) -> Tuple[int, int]:
        first = counter(da, host)
        second = counter(db, host)
        if maxorder:
            second = max(second, counter(drev, host))
        return first, second

    return count
