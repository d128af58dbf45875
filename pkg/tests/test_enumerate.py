import pytest

from digraph.canonical import tree_code
from digraph.enumerate import (
    enumerate_directed_trees,
    enumerate_hosts,
    host_count,
    host_from_index,
    host_index,
    index_chunks,
)
from digraph.formats import tree_literal
from digraph.graph import Digraph, DigraphError, SizeLimitError
from digraph.trees import TreeError


def test_host_count():
    assert host_count(1) == 1
    assert host_count(3) == 64
    assert host_count(5) == 1 << 20


def test_index_bit_order():
    # position 0 is (0,1) and sits in the most significant bit
    assert host_from_index(2, 0b10).arcs() == [(0, 1)]
    assert host_from_index(2, 0b01).arcs() == [(1, 0)]
    assert host_from_index(3, 0) == Digraph.empty(3)
    assert host_from_index(3, 63) == Digraph.complete(3)


def test_index_round_trip():
    for index in range(host_count(3)):
        assert host_index(host_from_index(3, index)) == index


def test_index_out_of_range():
    with pytest.raises(DigraphError):
        host_from_index(2, 4)


def test_enumeration_is_in_index_order():
    hosts = list(enumerate_hosts(3, start=10, stop=13))
    assert [host_index(h) for h in hosts] == [10, 11, 12]
    assert len(list(enumerate_hosts(2))) == 4


def test_canonical_enumeration_keeps_smallest_index():
    hosts = list(enumerate_hosts(2, canonical=True))
    assert [host_index(h) for h in hosts] == [0, 1, 3]


@pytest.mark.parametrize("n,error", [(0, DigraphError), (6, SizeLimitError)])
def test_host_size_limits(n, error):
    with pytest.raises(error):
        list(enumerate_hosts(n))


@pytest.mark.parametrize("k,count", [(1, 1), (2, 3), (3, 8), (4, 27)])
def test_tree_counts(k, count):
    trees = enumerate_directed_trees(k)
    assert len(trees) == count
    assert all(t.k == k + 1 for t in trees)
    assert len({tree_code(t) for t in trees}) == count


def test_tree_enumeration_is_deterministic():
    for k in range(1, 5):
        first = [tree_literal(t) for t in enumerate_directed_trees(k)]
        assert first == [tree_literal(t) for t in enumerate_directed_trees(k)]


def test_tree_limits():
    with pytest.raises(TreeError):
        enumerate_directed_trees(0)
    with pytest.raises(SizeLimitError):
        enumerate_directed_trees(9)


def test_index_chunks():
    assert index_chunks(10, 3) == [(0, 4), (4, 7), (7, 10)]
    assert index_chunks(2, 5) == [(0, 1), (1, 2)]
    assert index_chunks(5, 1) == [(0, 5)]
    assert index_chunks(0, 4) == []
