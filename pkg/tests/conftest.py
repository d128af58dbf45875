"""
Shared fixtures: small named hosts, the eight 3-arc trees and a brute-force
homomorphism counter used as an independent oracle.
"""

import itertools

import pytest

from digraph.enumerate import enumerate_directed_trees, enumerate_hosts
from digraph.formats import digraph_from_bits
from digraph.graph import Digraph
from digraph.trees import RootedDirectedTree


def brute_force_hom(pattern: Digraph, host: Digraph, injective: bool = False) -> int:
    """Try every map V(pattern) -> V(host)."""
    arcs = pattern.arcs()
    count = 0
    for phi in itertools.product(range(host.n), repeat=pattern.n):
        if injective and len(set(phi)) < pattern.n:
            continue
        if all(host.has_arc(phi[u], phi[v]) for u, v in arcs):
            count += 1
    return count


@pytest.fixture
def brute_hom():
    return brute_force_hom


@pytest.fixture
def triangle():
    """Directed 3-cycle 0->1->2->0."""
    return Digraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def single_arc():
    return Digraph.from_arcs(2, [(0, 1)])


@pytest.fixture
def five_vertex_host():
    """The 5-vertex host separating P_{+++} from P_{+-+}."""
    return digraph_from_bits(5, "0110000111110001000010000")


@pytest.fixture(scope="session")
def three_arc_trees():
    return enumerate_directed_trees(3)


@pytest.fixture(scope="session")
def small_trees():
    """The single vertex plus every directed tree with at most 4 arcs."""
    trees = [RootedDirectedTree((None,), (None,))]
    for k in range(1, 5):
        trees.extend(enumerate_directed_trees(k))
    return trees


@pytest.fixture(scope="session")
def small_hosts():
    """Every labelled host on 1..3 vertices."""
    return [host for n in range(1, 4) for host in enumerate_hosts(n)]
