import pytest

from digraph.canonical import trees_isomorphic
from digraph.trees import Orientation, RootedDirectedTree, TreeError, make_oriented_path, make_star


def test_star_layout():
    star = make_star(2, 1)
    assert star.k == 4
    assert star.arcs() == [(1, 0), (2, 0), (0, 3)]
    assert star.ch_in(0) == (1, 2)
    assert star.ch_out(0) == (3,)
    assert star.star_shape() == (2, 1)


@pytest.mark.parametrize("a,b", [(0, 0), (-1, 2), (2, -1)])
def test_degenerate_star(a, b):
    with pytest.raises(TreeError):
        make_star(a, b)


def test_oriented_path():
    path = make_oriented_path("+-+")
    assert path.k == 4
    assert path.arcs() == [(0, 1), (2, 1), (2, 3)]
    assert path.leaves() == [0, 3]
    assert path.star_shape() is None


def test_path_accepts_arrow_signs():
    assert make_oriented_path("→←").arcs() == make_oriented_path("+-").arcs()


@pytest.mark.parametrize("signs", ["", "+x", "++*"])
def test_bad_path_signs(signs):
    with pytest.raises(TreeError):
        make_oriented_path(signs)


def test_short_shapes():
    assert make_oriented_path("+").star_shape() == (0, 1)
    assert make_oriented_path("+-").star_shape() == (2, 0)
    assert RootedDirectedTree((None,), (None,)).star_shape() is None


def test_parent_must_precede_child():
    with pytest.raises(TreeError):
        RootedDirectedTree((None, 1), (None, Orientation.OUT))
    with pytest.raises(TreeError):
        RootedDirectedTree((None, 0), (None, "out"))


def test_from_arcs_relabels_from_root():
    tree = RootedDirectedTree.from_arcs(3, [(2, 1), (1, 0)], root=2)
    assert tree.parent == (None, 0, 1)
    assert tree.orient == (None, Orientation.OUT, Orientation.OUT)


def test_from_arcs_rejects_repeated_edge():
    with pytest.raises(TreeError):
        RootedDirectedTree.from_arcs(3, [(0, 1), (1, 0)])


def test_from_arcs_rejects_wrong_arc_count():
    with pytest.raises(TreeError):
        RootedDirectedTree.from_arcs(3, [(0, 1)])


def test_reverse_swaps_star_sides():
    assert make_star(2, 1).reverse().star_shape() == (1, 2)


def test_reroot_preserves_isomorphism_type():
    path = make_oriented_path("+-+")
    rerooted = path.reroot(1)
    assert rerooted.degree(0) == 2
    assert trees_isomorphic(rerooted, path)
    with pytest.raises(TreeError):
        path.reroot(4)


def test_to_digraph():
    graph = make_star(1, 2).to_digraph()
    assert graph.n == 4
    assert graph.profile.deg_in[0] == 1
    assert graph.profile.deg_out[0] == 2


def test_from_digraph_round_trip():
    path = make_oriented_path("++-")
    assert trees_isomorphic(RootedDirectedTree.from_digraph(path.to_digraph()), path)
