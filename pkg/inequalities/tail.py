"""
Tail-truncated counts and pointwise Hölder envelopes.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Union

from digraph.graph import Digraph
from digraph.trees import Orientation, RootedDirectedTree, TreeError
from homcount.tree import WeightVector, hom_tail, rooted_counts

from .report import BoundReport, exact_report, float_report

logger = logging.getLogger(__name__)

TAIL_CONSTANT = 4
UNWEIGHTED_TAIL_CONSTANT = 2


def tail_moment(host: Digraph, delta: int, power: Union[int, Fraction]) -> Union[int, float]:
    """sum_v d(v)^power * 1{d(v) >= delta}; exact for integer powers."""
    degrees = [d for d in host.profile.total if d >= delta]
    if isinstance(power, int) or getattr(power, "denominator", 1) == 1:
        e = int(power)
        return sum(d ** e for d in degrees)
    return sum(float(d) ** float(power) for d in degrees)


def check_tail_theorem(
    tree: RootedDirectedTree,
    host: Digraph,
    delta: int,
    alpha: Optional[WeightVector] = None,
) -> BoundReport:
    """hom_{delta,alpha}(T,H) <= 4 sum_v d(v)^{k-1+|alpha|} 1{d(v) >= delta}"""
    if alpha is None:
        alpha = WeightVector.zeros(tree.k)
    count = hom_tail(tree, host, delta, alpha)
    moment = tail_moment(host, delta, tree.k - 1 + alpha.total)
    details = {"delta": delta, "alpha": [str(a) for a in alpha.alpha], "moment": moment}
    if count.exact:
        return exact_report("tail", count.value, TAIL_CONSTANT * moment, details=details)
    return float_report("tail", count.value, float(TAIL_CONSTANT * moment), details=details)


def check_tail_unweighted(tree: RootedDirectedTree, host: Digraph, delta: int) -> BoundReport:
    """hom_delta(T,H) <= 2 sum_v d(v)^{k-1} 1{d(v) >= delta}"""
    count = hom_tail(tree, host, delta)
    moment = tail_moment(host, delta, tree.k - 1)
    return exact_report(
        "tail-unweighted", count.value, UNWEIGHTED_TAIL_CONSTANT * moment,
        details={"delta": delta, "moment": moment},
    )


def tail_ratio(
    tree: RootedDirectedTree,
    host: Digraph,
    delta: int,
    alpha: Optional[WeightVector] = None,
) -> Optional[Fraction]:
    """hom_{delta,alpha} / sum_v d^{k-1+|alpha|} 1{d >= delta}; None when the moment is 0."""
    if alpha is None:
        alpha = WeightVector.zeros(tree.k)
    if not alpha.is_integral:
        raise ValueError("tail_ratio needs integer exponents")
    moment = tail_moment(host, delta, tree.k - 1 + alpha.total)
    if moment == 0:
        return None
    return Fraction(hom_tail(tree, host, delta, alpha).value, moment)


def envelope(
    tree: RootedDirectedTree,
    host: Digraph,
    exponents: Mapping[int, Fraction],
) -> List[float]:
    """
    Iterated pointwise Hölder envelope E_root(v) for every host vertex v.

    For the arc from x to child c with exponent p:
        contribution(v) = deg(v)^{1-1/p} * (sum_{u in N(v)} E_c(u)^p)^{1/p}
    where N and deg follow the arc direction. Leaves have E = 1.
    """
    n = host.n
    E: List[List[float]] = [[1.0] * n for _ in range(tree.k)]
    for c in range(tree.k - 1, 0, -1):
        p = float(exponents[c])
        nbrs = host.out_lists if tree.orient[c] is Orientation.OUT else host.in_lists
        ec = E[c]
        ep = E[tree.parent[c]]
        for v in range(n):
            deg = len(nbrs[v])
            if deg == 0:
                ep[v] = 0.0
                continue
            if p == 1.0:
                local = sum(ec[u] for u in nbrs[v])
            else:
                local = float(deg) ** (1 - 1 / p) * sum(ec[u] ** p for u in nbrs[v]) ** (1 / p)
            ep[v] *= local
    return E[0]


def _resolve_exponents(
    tree: RootedDirectedTree,
    exponents: Union[Mapping[int, Fraction], Fraction, int],
) -> Dict[int, Fraction]:
    if isinstance(exponents, Mapping):
        resolved = {c: Fraction(exponents[c]) for c in range(1, tree.k) if c in exponents}
        missing = [c for c in range(1, tree.k) if c not in resolved]
        if missing:
            raise TreeError(f"No exponent given for the arcs into vertices {missing}")
    else:
        resolved = {c: Fraction(exponents) for c in range(1, tree.k)}
    for c, p in resolved.items():
        if p < 1:
            raise ValueError(f"Hölder exponent must be >= 1, got {p} on the arc to vertex {c}")
    return resolved


def check_pointwise_envelope(
    tree: RootedDirectedTree,
    host: Digraph,
    exponents: Union[Mapping[int, Fraction], Fraction, int],
) -> List[BoundReport]:
    """
    hom_v(T,H) <= E_root(v) for every host vertex v.

    Args:
        exponents: Per-arc exponents keyed by the child vertex of the arc, or
            a single exponent used on every arc
    """
    resolved = _resolve_exponents(tree, exponents)
    counts = rooted_counts(tree, host)
    env = envelope(tree, host, resolved)
    all_unit = all(p == 1 for p in resolved.values())

    reports = []
    for v in range(host.n):
        # with p = 1 everywhere the envelope is the recursion itself
        certified = counts[v] <= env[v] if all_unit else None
        reports.append(
            float_report("envelope", counts[v], env[v], certified=certified, details={"vertex": v})
        )
    return reports


def check_uniform_envelope(tree: RootedDirectedTree, host: Digraph, p: Union[Fraction, int]) -> List[BoundReport]:
    return check_pointwise_envelope(tree, host, p)
