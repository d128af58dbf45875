import itertools

import networkx as nx
import pytest
from hypothesis import given

from digraph.canonical import canonical_form, canonical_tree, tree_code, trees_isomorphic
from digraph.enumerate import enumerate_hosts
from digraph.graph import Digraph, SizeLimitError
from digraph.trees import make_oriented_path, make_star
from strategies import relabelled, trees


@given(relabelled())
def test_form_invariant_under_relabelling(case):
    graph, perm = case
    assert canonical_form(graph.relabel(perm)) == canonical_form(graph)


@given(trees(max_k=7))
def test_tree_code_ignores_root_on_drawn_trees(tree):
    code = tree_code(tree)
    for root in range(tree.k):
        assert tree_code(tree.reroot(root)) == code
    assert trees_isomorphic(tree.reverse().reverse(), tree)


def test_form_matches_networkx_on_three_vertices():
    hosts = list(enumerate_hosts(3))
    forms = [canonical_form(h) for h in hosts]
    nx_graphs = [h.to_networkx() for h in hosts]
    for i, j in itertools.combinations(range(len(hosts)), 2):
        assert (forms[i] == forms[j]) == nx.is_isomorphic(nx_graphs[i], nx_graphs[j])


@pytest.mark.parametrize("n,classes", [(1, 1), (2, 3), (3, 16), (4, 218)])
def test_isomorphism_class_counts(n, classes):
    assert sum(1 for _ in enumerate_hosts(n, canonical=True)) == classes


def test_form_size_ceiling():
    with pytest.raises(SizeLimitError):
        canonical_form(Digraph.empty(9))


def test_tree_code_ignores_root():
    path = make_oriented_path("+-+")
    assert tree_code(path.reroot(2)) == tree_code(path)


def test_canonical_tree_is_isomorphic():
    tree = make_oriented_path("-+-+")
    canon = canonical_tree(tree)
    assert tree_code(canon) == tree_code(tree)
    assert canonical_tree(tree.reroot(3)) == canon


def test_star_orientation_matters():
    assert not trees_isomorphic(make_star(2, 1), make_star(1, 2))
    assert trees_isomorphic(make_star(2, 1), make_star(1, 2).reverse())


def test_path_read_backwards():
    assert trees_isomorphic(make_oriented_path("++-"), make_oriented_path("+--"))
    assert not trees_isomorphic(make_oriented_path("+++"), make_oriented_path("+-+"))


def test_tree_code_agrees_with_networkx(three_arc_trees):
    for a, b in itertools.combinations(three_arc_trees, 2):
        assert not nx.is_isomorphic(a.to_digraph().to_networkx(), b.to_digraph().to_networkx())
