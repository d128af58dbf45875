"""Hypothesis strategies for small digraphs, trees and rational matrices."""

from hypothesis import strategies as st

from digraph.graph import Digraph
from digraph.trees import Orientation, RootedDirectedTree
from homcount.weighted import NonnegMatrix


@st.composite
def digraphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    full = (1 << n) - 1
    rows = tuple(draw(st.integers(0, full)) & ~(1 << i) for i in range(n))
    return Digraph(n, rows)


@st.composite
def trees(draw, min_k=1, max_k=6):
    k = draw(st.integers(min_k, max_k))
    parent = (None,) + tuple(draw(st.integers(0, i - 1)) for i in range(1, k))
    orient = (None,) + tuple(
        draw(st.sampled_from([Orientation.OUT, Orientation.IN])) for _ in range(1, k)
    )
    return RootedDirectedTree(parent, orient)


@st.composite
def nonneg_matrices(draw, min_n=1, max_n=4):
    n = draw(st.integers(min_n, max_n))
    entry = st.fractions(min_value=0, max_value=3, max_denominator=4)
    return NonnegMatrix.of([[draw(entry) for _ in range(n)] for _ in range(n)])


@st.composite
def relabelled(draw, graphs=None):
    """(graph, perm) with perm a permutation of the graph's vertices."""
    graph = draw(graphs if graphs is not None else digraphs())
    perm = draw(st.permutations(range(graph.n)))
    return graph, list(perm)
