"""
Published Witness Table

Recomputes the 28 incomparability witnesses for the eight 3-arc trees and the
5-vertex host separating P_{+++} from P_{+-+}. Hosts are stored as row-major
bit strings, the counts as printed.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, NamedTuple, Tuple

from digraph.formats import digraph_from_bits, matrix_literal
from digraph.graph import Digraph
from digraph.trees import RootedDirectedTree, make_oriented_path, make_star
from homcount.general import hom_general

logger = logging.getLogger(__name__)


class AppendixMismatch(RuntimeError):
    """A recomputed count differs from the published one"""
    pass


PATTERNS: Dict[str, RootedDirectedTree] = {
    "S_{0,3}": make_star(0, 3),
    "S_{3,0}": make_star(3, 0),
    "S_{1,2}": make_star(1, 2),
    "S_{2,1}": make_star(2, 1),
    "P_{+++}": make_oriented_path("+++"),
    "P_{++-}": make_oriented_path("++-"),
    "P_{+-+}": make_oriented_path("+-+"),
    "P_{-++}": make_oriented_path("-++"),
}

# A, B, (n, bits, hom A, hom B) for H_>, then the same for H_<
_TABLE: Tuple[Tuple[str, str, Tuple[int, str, int, int], Tuple[int, str, int, int]], ...] = (
    ("S_{0,3}", "S_{3,0}", (3, "000000110", 8, 2), (3, "000100100", 2, 8)),
    ("S_{0,3}", "S_{1,2}", (2, "0010", 1, 0), (4, "0110100010001000", 11, 14)),
    ("S_{0,3}", "S_{2,1}", (2, "0010", 1, 0), (4, "0001000100010110", 11, 20)),
    ("S_{0,3}", "P_{+++}", (2, "0010", 1, 0), (4, "0001001101010110", 25, 28)),
    ("S_{0,3}", "P_{++-}", (2, "0010", 1, 0), (3, "001001010", 3, 4)),
    ("S_{0,3}", "P_{+-+}", (3, "000000110", 8, 4), (3, "000100100", 2, 4)),
    ("S_{0,3}", "P_{-++}", (2, "0010", 1, 0), (4, "0001001101010110", 25, 26)),
    ("S_{3,0}", "S_{1,2}", (2, "0010", 1, 0), (4, "0000000100011110", 11, 20)),
    ("S_{3,0}", "S_{2,1}", (2, "0010", 1, 0), (4, "0111100010000000", 11, 14)),
    ("S_{3,0}", "P_{+++}", (2, "0010", 1, 0), (4, "0000001101011110", 25, 28)),
    ("S_{3,0}", "P_{++-}", (2, "0010", 1, 0), (4, "0000001101011110", 25, 26)),
    ("S_{3,0}", "P_{+-+}", (3, "000100100", 8, 4), (3, "000000110", 2, 4)),
    ("S_{3,0}", "P_{-++}", (2, "0010", 1, 0), (3, "000001110", 3, 4)),
    ("S_{2,1}", "S_{1,2}", (3, "001001010", 5, 3), (3, "000001110", 3, 5)),
    ("S_{1,2}", "P_{+++}", (3, "000001100", 1, 0), (4, "0110100001000100", 8, 9)),
    ("S_{1,2}", "P_{++-}", (3, "011100000", 5, 3), (3, "000100110", 1, 2)),
    ("S_{1,2}", "P_{+-+}", (3, "001001110", 10, 8), (2, "0010", 0, 1)),
    ("S_{1,2}", "P_{-++}", (3, "011100000", 5, 4), (3, "011001000", 1, 2)),
    ("S_{2,1}", "P_{+++}", (3, "000001100", 1, 0), (4, "0111100001000000", 8, 9)),
    ("S_{2,1}", "P_{++-}", (3, "010100100", 5, 4), (3, "000100110", 1, 2)),
    ("S_{2,1}", "P_{+-+}", (3, "001001110", 10, 8), (2, "0010", 0, 1)),
    ("S_{2,1}", "P_{-++}", (3, "010100100", 5, 3), (3, "000100110", 1, 2)),
    ("P_{+++}", "P_{++-}", (4, "0000000101001110", 9, 8), (3, "000001100", 0, 1)),
    ("P_{+++}", "P_{-++}", (4, "0001000101001100", 10, 9), (3, "000001100", 0, 1)),
    ("P_{++-}", "P_{+-+}", (4, "0001001101010110", 32, 31), (2, "0010", 0, 1)),
    ("P_{++-}", "P_{-++}", (3, "001001010", 4, 3), (3, "000001110", 3, 4)),
    ("P_{+-+}", "P_{-++}", (2, "0010", 1, 0), (4, "0000001101011110", 31, 32)),
    ("P_{+++}", "P_{+-+}", (5, "0110000111110001000010000", 37, 36), (2, "0010", 0, 1)),
)

FIVE_VERTEX_HOST = (5, "0110000111110001000010000")
FIVE_VERTEX_DELTA = -1


class DeltaIdentity(NamedTuple):
    lhs: int
    rhs: int
    equal: bool


def delta_identity(host: Digraph) -> DeltaIdentity:
    """
    hom(P_{+-+}) - hom(P_{+++}) against the arc sum
    Σ_{x→y} (d⁻(y)d⁺(x) - d⁻(x)d⁺(y)).
    """
    lhs = hom_general(PATTERNS["P_{+-+}"].to_digraph(), host) - hom_general(PATTERNS["P_{+++}"].to_digraph(), host)
    rhs = sum(
        host.deg_in(y) * host.deg_out(x) - host.deg_in(x) * host.deg_out(y)
        for x, y in host.arcs()
    )
    return DeltaIdentity(lhs, rhs, lhs == rhs)


@dataclass(frozen=True)
class AppendixRow:
    a: str
    b: str
    host_gt: Digraph
    counts_gt: Tuple[int, int]
    host_lt: Digraph
    counts_lt: Tuple[int, int]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "pair": [self.a, self.b],
            "host_gt": {"n": self.host_gt.n, "matrix": matrix_literal(self.host_gt),
                        "counts": [str(c) for c in self.counts_gt]},
            "host_lt": {"n": self.host_lt.n, "matrix": matrix_literal(self.host_lt),
                        "counts": [str(c) for c in self.counts_lt]},
        }


@dataclass(frozen=True)
class AppendixResult:
    rows: List[AppendixRow]
    delta: DeltaIdentity

    def to_dict(self) -> Dict[str, Any]:
        return {
            "rows": [row.to_dict() for row in self.rows],
            "verified": len(self.rows),
            "delta": {"lhs": str(self.delta.lhs), "rhs": str(self.delta.rhs), "equal": self.delta.equal},
        }


def _recount(a: str, b: str, host: Digraph) -> Tuple[int, int]:
    return (
        hom_general(PATTERNS[a].to_digraph(), host),
        hom_general(PATTERNS[b].to_digraph(), host),
    )


def reproduce_appendix_table() -> AppendixResult:
    """
    Recount every published witness exactly.

    Raises:
        AppendixMismatch: the first row whose counts or strictness differ
    """
    rows = []
    for a, b, gt, lt in _TABLE:
        label = f"{a} ∥ {b}"
        host_gt = digraph_from_bits(gt[0], gt[1])
        host_lt = digraph_from_bits(lt[0], lt[1])
        counts_gt = _recount(a, b, host_gt)
        counts_lt = _recount(a, b, host_lt)

        if counts_gt != (gt[2], gt[3]) or not counts_gt[0] > counts_gt[1]:
            raise AppendixMismatch(f"Row {label}: H_> gives {counts_gt}, published {gt[2]}>{gt[3]}")
        if counts_lt != (lt[2], lt[3]) or not counts_lt[0] < counts_lt[1]:
            raise AppendixMismatch(f"Row {label}: H_< gives {counts_lt}, published {lt[2]}<{lt[3]}")
        logger.debug(f"Row {label}: {counts_gt[0]}>{counts_gt[1]}, {counts_lt[0]}<{counts_lt[1]}")
        rows.append(AppendixRow(a, b, host_gt, counts_gt, host_lt, counts_lt))

    delta = delta_identity(digraph_from_bits(*FIVE_VERTEX_HOST))
    if not delta.equal or delta.lhs != FIVE_VERTEX_DELTA:
        raise AppendixMismatch(f"Delta identity on the 5-vertex host: lhs {delta.lhs}, rhs {delta.rhs}")

    logger.info(f"Verified {len(rows)} witness rows and the 5-vertex delta identity")
    return AppendixResult(rows, delta)
