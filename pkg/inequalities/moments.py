"""
Per-vertex moment forms of the tree bounds.
"""

import logging
from fractions import Fraction

from digraph.graph import Digraph, DigraphError
from digraph.trees import RootedDirectedTree
from homcount.general import emb_injective, emb_rooted, embtrunc_rooted
from homcount.tree import hom_tree

from .report import BoundReport, exact_report

logger = logging.getLogger(__name__)


def _require_vertices(host: Digraph) -> None:
    if host.n == 0:
        raise DigraphError("Moment bounds need a nonempty host")


def check_moment_domination(tree: RootedDirectedTree, host: Digraph) -> BoundReport:
    """hom(T,H)/|V| <= max{mean deg_in^{h-1}, mean deg_out^{h-1}}"""
    _require_vertices(host)
    h = tree.k
    p = host.profile
    mean_in = Fraction(sum(d ** (h - 1) for d in p.deg_in), host.n)
    mean_out = Fraction(sum(d ** (h - 1) for d in p.deg_out), host.n)
    return exact_report(
        "moments", Fraction(hom_tree(tree, host), host.n), max(mean_in, mean_out),
        details={"h": h, "mean_in_pow": mean_in, "mean_out_pow": mean_out},
    )


def check_embedding_moment(tree: RootedDirectedTree, host: Digraph) -> BoundReport:
    """emb(T,H)/|V| <= 2 mean d^{h-1}"""
    _require_vertices(host)
    h = tree.k
    mean_total = Fraction(sum(d ** (h - 1) for d in host.profile.total), host.n)
    lhs = Fraction(emb_injective(tree.to_digraph(), host), host.n)
    return exact_report("embedding-moment", lhs, 2 * mean_total, details={"h": h})


def check_truncation_domination(tree: RootedDirectedTree, host: Digraph, delta: int) -> BoundReport:
    """
    sum_v emb_v(T,H) <= sum_v embtrunc_v(T,H,delta) + 2h sum_v d(v)^{h-1} 1{d(v) >= delta}

    Embeddings missed by the truncated count put some non-root vertex on a
    vertex of degree >= delta; each such vertex contributes at most the
    unweighted tail bound.
    """
    _require_vertices(host)
    h = tree.k
    lhs = sum(emb_rooted(tree, host, v) for v in range(host.n))
    truncated = sum(embtrunc_rooted(tree, host, v, delta) for v in range(host.n))
    tail = sum(d ** (h - 1) for d in host.profile.total if d >= delta)
    return exact_report(
        "truncation", lhs, truncated + 2 * h * tail,
        details={"delta": delta, "truncated": truncated, "tail_moment": tail},
    )
