import pytest

from digraph.enumerate import enumerate_hosts
from digraph.graph import Digraph, DigraphError
from digraph.trees import make_oriented_path, make_star
from homcount.general import (
    count_maps,
    emb_injective,
    emb_rooted,
    embtrunc_rooted,
    hom_components,
    hom_general,
)


@pytest.fixture(scope="module")
def connected_patterns():
    return [
        g for n in range(1, 4)
        for g in enumerate_hosts(n, canonical=True)
        if g.is_weakly_connected()
    ]


def test_matches_brute_force(connected_patterns, small_hosts, brute_hom):
    for pattern in connected_patterns:
        for host in small_hosts:
            assert hom_general(pattern, host) == brute_hom(pattern, host)


def test_injective_matches_brute_force(connected_patterns, small_hosts, brute_hom):
    for pattern in connected_patterns:
        for host in small_hosts:
            assert emb_injective(pattern, host) == brute_hom(pattern, host, injective=True)


def test_cycle_into_itself(triangle):
    assert hom_general(triangle, triangle) == 3
    assert emb_injective(triangle, triangle) == 3


def test_five_vertex_paths(five_vertex_host):
    assert hom_general(make_oriented_path("+++").to_digraph(), five_vertex_host) == 37
    assert hom_general(make_oriented_path("+-+").to_digraph(), five_vertex_host) == 36


def test_disconnected_pattern_rejected(triangle):
    pattern = Digraph.from_arcs(3, [(0, 1)])
    with pytest.raises(DigraphError):
        hom_general(pattern, triangle)
    with pytest.raises(DigraphError):
        emb_injective(pattern, triangle)
    with pytest.raises(DigraphError):
        hom_general(Digraph.empty(0), triangle)


def test_components_multiply(triangle, five_vertex_host, brute_hom):
    pattern = Digraph.from_arcs(4, [(0, 1), (2, 3)])
    assert hom_components(pattern, triangle) == 9
    assert hom_components(pattern, five_vertex_host) == 81
    assert hom_components(Digraph.empty(2), triangle) == 9
    assert hom_components(Digraph.empty(0), triangle) == 1
    assert count_maps(pattern, five_vertex_host) == brute_hom(pattern, five_vertex_host)


def test_empty_host():
    assert count_maps(Digraph.empty(1), Digraph.empty(0)) == 0


def test_rooted_embeddings_sum(five_vertex_host):
    for tree in (make_star(1, 2), make_oriented_path("+-+"), make_oriented_path("++")):
        total = sum(emb_rooted(tree, five_vertex_host, v) for v in range(5))
        assert total == emb_injective(tree.to_digraph(), five_vertex_host)


def test_truncated_embeddings(five_vertex_host):
    tree = make_oriented_path("+-")
    for v in range(5):
        full = emb_rooted(tree, five_vertex_host, v)
        assert embtrunc_rooted(tree, five_vertex_host, v, 100) == full
        assert embtrunc_rooted(tree, five_vertex_host, v, 0) == 0
        assert 0 <= embtrunc_rooted(tree, five_vertex_host, v, 3) <= full


def test_single_arc_rooted(triangle):
    tree = make_star(0, 1)
    assert emb_rooted(tree, triangle, 0) == 1


def test_root_image_checked(triangle):
    with pytest.raises(DigraphError):
        count_maps(triangle, triangle, root_image=3)
