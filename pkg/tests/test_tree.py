import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from digraph.graph import Digraph, DigraphError
from digraph.trees import TreeError, make_oriented_path, make_star
from homcount.general import emb_injective, hom_general
from homcount.tree import (
    WeightVector,
    hom_rooted,
    hom_tail,
    hom_tree,
    pair_counts,
    rooted_counts,
    star_hom,
)
from strategies import digraphs, relabelled, trees


def test_agrees_with_general_counter(small_trees, small_hosts):
    for tree in small_trees:
        pattern = tree.to_digraph()
        for host in small_hosts:
            assert hom_tree(tree, host) == hom_general(pattern, host)


@settings(deadline=None)
@given(trees(), digraphs())
def test_agrees_with_general_counter_on_drawn_instances(tree, host):
    assert hom_tree(tree, host) == hom_general(tree.to_digraph(), host)


@given(trees(), digraphs())
def test_reversal_duality(tree, host):
    assert hom_tree(tree.reverse(), host) == hom_tree(tree, host.reverse())


@given(trees(), digraphs(), st.data())
def test_root_choice_is_irrelevant(tree, host, data):
    root = data.draw(st.integers(0, tree.k - 1))
    assert hom_tree(tree.reroot(root), host) == hom_tree(tree, host)


@given(trees(max_k=5), relabelled())
def test_invariant_under_host_relabelling(tree, case):
    host, perm = case
    assert hom_tree(tree, host.relabel(perm)) == hom_tree(tree, host)


@settings(deadline=None)
@given(trees(max_k=5), digraphs(max_n=5))
def test_injective_embeddings_never_exceed_homomorphisms(tree, host):
    assert emb_injective(tree.to_digraph(), host) <= hom_tree(tree, host)


def test_known_counts(five_vertex_host, triangle):
    assert hom_tree(make_oriented_path("+++"), five_vertex_host) == 37
    assert hom_tree(make_oriented_path("+-+"), five_vertex_host) == 36
    assert hom_tree(make_oriented_path("++"), triangle) == 3


def test_single_arc_host(single_arc):
    counts = {
        "S03": hom_tree(make_star(0, 3), single_arc),
        "S30": hom_tree(make_star(3, 0), single_arc),
        "S12": hom_tree(make_star(1, 2), single_arc),
        "S21": hom_tree(make_star(2, 1), single_arc),
        "P+++": hom_tree(make_oriented_path("+++"), single_arc),
        "P++-": hom_tree(make_oriented_path("++-"), single_arc),
        "P+-+": hom_tree(make_oriented_path("+-+"), single_arc),
        "P-++": hom_tree(make_oriented_path("-++"), single_arc),
    }
    assert counts == {"S03": 1, "S30": 1, "S12": 0, "S21": 0, "P+++": 0, "P++-": 0, "P+-+": 1, "P-++": 0}


def test_rooted_counts(five_vertex_host):
    tree = make_oriented_path("+++")
    counts = rooted_counts(tree, five_vertex_host)
    assert counts == [9, 9, 9, 5, 5]
    assert hom_rooted(tree, five_vertex_host, 3) == 5
    with pytest.raises(DigraphError):
        hom_rooted(tree, five_vertex_host, 5)


def test_empty_host():
    assert hom_tree(make_star(1, 1), Digraph.empty(0)) == 0


def test_star_closed_form(small_hosts):
    for a in range(4):
        for b in range(4):
            if a + b == 0:
                continue
            star = make_star(a, b)
            for host in small_hosts:
                assert star_hom(a, b, host) == hom_tree(star, host)
    with pytest.raises(TreeError):
        star_hom(0, 0, small_hosts[0])


def _brute_tail(tree, host, delta, alpha):
    degrees = host.profile.total
    total = 0
    for phi in itertools.product(range(host.n), repeat=tree.k):
        if degrees[phi[0]] < delta:
            continue
        if not all(host.has_arc(phi[u], phi[v]) for u, v in tree.arcs()):
            continue
        weight = 1
        for x, a in enumerate(alpha):
            weight *= degrees[phi[x]] ** a
        total += weight
    return total


def test_tail_count_matches_brute_force(five_vertex_host):
    tree = make_oriented_path("+-")
    for delta in range(0, 7):
        for alpha in ((0, 0, 0), (1, 0, 2), (2, 1, 0)):
            count = hom_tail(tree, five_vertex_host, delta, WeightVector.of(alpha))
            assert count.exact
            assert count.value == _brute_tail(tree, five_vertex_host, delta, alpha)


def test_tail_defaults(five_vertex_host):
    tree = make_star(1, 2)
    assert hom_tail(tree, five_vertex_host, 0).value == hom_tree(tree, five_vertex_host)
    assert hom_tail(tree, five_vertex_host, 100).value == 0


def test_fractional_tail_weights(triangle):
    count = hom_tail(make_oriented_path("+"), triangle, 0, WeightVector.of(["1/2", 0]))
    assert not count.exact
    assert count.value == pytest.approx(3 * 2 ** 0.5)


def test_tail_weight_length(triangle):
    with pytest.raises(TreeError):
        hom_tail(make_oriented_path("+"), triangle, 0, WeightVector.of([1]))


def test_weights_nonnegative():
    with pytest.raises(ValueError):
        WeightVector.of([1, Fraction(-1, 2)])
    assert WeightVector.of([1, "1/2"]).total == Fraction(3, 2)
    assert not WeightVector.of([1, "1/2"]).is_integral


def test_pair_counts_reconstruct(five_vertex_host, small_hosts):
    tree = make_oriented_path("+-+")
    table = pair_counts(tree, 1, 2, five_vertex_host)
    assert (table.i_a, table.o_a, table.i_b, table.o_b) == (1, 0, 0, 1)
    assert table.total == five_vertex_host.arc_count
    assert table.reconstruct(five_vertex_host) == 36
    for host in small_hosts:
        assert pair_counts(tree, 1, 2, host).reconstruct(host) == hom_tree(tree, host)


def test_pair_counts_marginals(five_vertex_host):
    table = pair_counts(make_oriented_path("++++"), 1, 3, five_vertex_host)
    assert sum(table.row_marginals) == sum(table.col_marginals) == table.total
    assert table.reconstruct(five_vertex_host) == hom_tree(make_oriented_path("++++"), five_vertex_host)


def test_pair_counts_need_distinct_vertices(triangle):
    with pytest.raises(TreeError):
        pair_counts(make_oriented_path("+-+"), 1, 1, triangle)
