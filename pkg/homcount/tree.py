"""
Tree Homomorphism Counting

Leaf-to-root message passing over a rooted directed tree:

    F_x(v) = w_x(v) * prod_{c in ch_out(x)} sum_{u in N+(v)} F_c(u)
                    * prod_{c in ch_in(x)}  sum_{u in N-(v)} F_c(u)

with w_x = 1 for plain counts. Also provides the tail-weighted count, pair
counts between two tree vertices and degree-sum star counts.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

from digraph.graph import Digraph
from digraph.trees import Orientation, RootedDirectedTree, TreeError

logger = logging.getLogger(__name__)

Number = Union[int, float]


def _propagate(
    tree: RootedDirectedTree,
    host: Digraph,
    weights: Optional[List[List[Number]]] = None,
) -> List[List[Number]]:
    """Run the message pass; returns F_x for every tree vertex x."""
    n = host.n
    if weights is None:
        F: List[List[Number]] = [[1] * n for _ in range(tree.k)]
    else:
        F = [list(w) for w in weights]

    # parent[c] < c, so descending order visits children before parents
    for c in range(tree.k - 1, 0, -1):
        fc = F[c]
        nbrs = host.out_lists if tree.orient[c] is Orientation.OUT else host.in_lists
        fp = F[tree.parent[c]]
        for v in range(n):
            if fp[v]:
                fp[v] *= sum(fc[u] for u in nbrs[v])
    return F


def rooted_counts(tree: RootedDirectedTree, host: Digraph) -> List[int]:
    """hom_v(T, H) for every host vertex v."""
    return _propagate(tree, host)[0]


def hom_tree(tree: RootedDirectedTree, host: Digraph) -> int:
    if host.n == 0:
        return 0
    return sum(rooted_counts(tree, host))


def hom_rooted(tree: RootedDirectedTree, host: Digraph, v: int) -> int:
    host.check_vertex(v)
    return rooted_counts(tree, host)[v]


@dataclass(frozen=True)
class WeightVector:
    """Nonnegative rational exponents alpha_x, one per tree vertex."""
    alpha: Tuple[Fraction, ...]

    def __post_init__(self):
        for x, a in enumerate(self.alpha):
            if a < 0:
                raise ValueError(f"alpha[{x}] must be nonnegative, got {a}")

    @classmethod
    def zeros(cls, k: int) -> "WeightVector":
        return cls((Fraction(0),) * k)

    @classmethod
    def of(cls, values: Sequence[Any]) -> "WeightVector":
        return cls(tuple(Fraction(v) for v in values))

    @property
    def total(self) -> Fraction:
        return sum(self.alpha, Fraction(0))

    @property
    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.alpha)


class TailCount(NamedTuple):
    """Tail-weighted count; exact is False when a fractional power forced floats."""
    value: Number
    exact: bool


def hom_tail(
    tree: RootedDirectedTree,
    host: Digraph,
    delta: int,
    alpha: Optional[WeightVector] = None,
) -> TailCount:
    """
    Weighted count of homomorphisms whose root image has total degree >= delta.

    Each map contributes prod_x d(phi(x))^alpha_x. Integral alpha gives an exact
    integer; fractional alpha falls back to floats and reports exact=False.
    """
    if alpha is None:
        alpha = WeightVector.zeros(tree.k)
    if len(alpha.alpha) != tree.k:
        raise TreeError(f"alpha has {len(alpha.alpha)} entries, tree has {tree.k} vertices")

    degrees = host.profile.total
    exact = alpha.is_integral
    weights: List[List[Number]] = []
    for a in alpha.alpha:
        if exact:
            e = int(a)
            weights.append([d ** e for d in degrees])
        else:
            weights.append([float(d) ** float(a) for d in degrees])
    weights[0] = [w if d >= delta else 0 for w, d in zip(weights[0], degrees)]

    return TailCount(sum(_propagate(tree, host, weights)[0]), exact)


def star_hom(a: int, b: int, host: Digraph) -> int:
    """hom(S_{a,b}, H) = sum_v deg_in(v)^a * deg_out(v)^b, with 0^0 = 1."""
    if a < 0 or b < 0 or a + b == 0:
        raise TreeError(f"Star needs a, b >= 0 and a + b >= 1, got ({a}, {b})")
    p = host.profile
    return sum(i ** a * o ** b for i, o in zip(p.deg_in, p.deg_out))


@dataclass
class PairCountTable:
    """
    Counts N(u, w) of homomorphisms of T(a,b) sending a to u and b to w.

    T(a,b) is T with the pendant leaves at a and b removed; the exponents record
    how many in-/out-leaves were removed at each end.
    """
    counts: List[List[int]]
    i_a: int
    o_a: int
    i_b: int
    o_b: int
    core: RootedDirectedTree
    core_a: int
    core_b: int

    @property
    def row_marginals(self) -> List[int]:
        return [sum(row) for row in self.counts]

    @property
    def col_marginals(self) -> List[int]:
        n = len(self.counts)
        return [sum(self.counts[u][w] for u in range(n)) for w in range(n)]

    @property
    def total(self) -> int:
        return sum(self.row_marginals)

    def reconstruct(self, host: Digraph) -> int:
        """sum_{u,w} N(u,w) din(u)^i_a dout(u)^o_a din(w)^i_b dout(w)^o_b"""
        p = host.profile
        left = [i ** self.i_a * o ** self.o_a for i, o in zip(p.deg_in, p.deg_out)]
        right = [i ** self.i_b * o ** self.o_b for i, o in zip(p.deg_in, p.deg_out)]
        return sum(
            left[u] * self.counts[u][w] * right[w]
            for u in range(host.n)
            for w in range(host.n)
            if self.counts[u][w]
        )


def pendant_split(tree: RootedDirectedTree, a: int, b: int):
    """
    Remove the pendant leaves at a and b (never a or b themselves).

    Returns:
        (core arcs on original labels, kept vertices, (i_a, o_a, i_b, o_b))
    """
    tree.check_vertex(a)
    tree.check_vertex(b)
    if a == b:
        raise TreeError("Pair counts need two distinct tree vertices")

    removed = set()
    exps = []
    for end in (a, b):
        ins = outs = 0
        for y, o in tree.neighbors[end]:
            if y in (a, b) or tree.degree(y) != 1:
                continue
            removed.add(y)
            if o is Orientation.IN:
                ins += 1
            else:
                outs += 1
        exps.extend([ins, outs])

    kept = [x for x in range(tree.k) if x not in removed]
    arcs = [(u, v) for u, v in tree.arcs() if u not in removed and v not in removed]
    return arcs, kept, tuple(exps)


def pair_counts(tree: RootedDirectedTree, a: int, b: int, host: Digraph) -> PairCountTable:
    arcs, kept, (i_a, o_a, i_b, o_b) = pendant_split(tree, a, b)
    index = {x: i for i, x in enumerate(kept)}
    # from_arcs relabels in BFS order from a, so b moves
    core_arcs = [(index[u], index[v]) for u, v in arcs]
    core = RootedDirectedTree.from_arcs(len(kept), core_arcs, root=index[a])
    core_b = _locate(core, core_arcs, index[a], index[b])

    n = host.n
    counts = [[0] * n for _ in range(n)]
    for w in range(n):
        weights: List[List[Number]] = [[1] * n for _ in range(core.k)]
        weights[core_b] = [1 if v == w else 0 for v in range(n)]
        column = _propagate(core, host, weights)[0]
        for u in range(n):
            counts[u][w] = column[u]

    return PairCountTable(
        counts=counts, i_a=i_a, o_a=o_a, i_b=i_b, o_b=o_b,
        core=core, core_a=0, core_b=core_b,
    )


def _locate(core: RootedDirectedTree, arcs: List[Tuple[int, int]], root: int, target: int) -> int:
    """Label of the old vertex `target` after from_arcs relabelled from `root`."""
    k = core.k
    nbrs: Dict[int, List[int]] = {v: [] for v in range(k)}
    for u, v in arcs:
        nbrs[u].append(v)
        nbrs[v].append(u)
    order = [root]
    seen = {root}
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        for y in sorted(nbrs[x]):
            if y not in seen:
                seen.add(y)
                order.append(y)
    return order.index(target)

