import pytest

from digraph.canonical import tree_code
from digraph.graph import DigraphError, SizeLimitError
from digraph.trees import TreeError, make_oriented_path, make_star
from search.appendix import PATTERNS, delta_identity, reproduce_appendix_table
from search.stars import construct_star_witness, star_incomparability_suite
from search.sweep import compare_maxorder, compare_over_hosts, family_trees, sweep_family, sweep_pairs
from search.verdict import VerdictKind


def test_appendix_table_reproduces():
    result = reproduce_appendix_table()
    assert len(result.rows) == 28
    assert result.delta.lhs == -1 and result.delta.equal
    doc = result.to_dict()
    assert doc["verified"] == 28
    last = doc["rows"][-1]
    assert last["pair"] == ["P_{+++}", "P_{+-+}"]
    assert last["host_gt"]["counts"] == ["37", "36"]


def test_appendix_patterns_are_the_eight_trees(three_arc_trees):
    assert {tree_code(t) for t in PATTERNS.values()} == {tree_code(t) for t in three_arc_trees}


def test_delta_identity_everywhere(small_hosts, five_vertex_host):
    for host in small_hosts:
        assert delta_identity(host).equal
    delta = delta_identity(five_vertex_host)
    assert (delta.lhs, delta.rhs) == (-1, -1)


def test_pure_stars_incomparable():
    verdict = compare_over_hosts(make_star(0, 3), make_star(3, 0), 3)
    assert verdict.kind is VerdictKind.INCOMPARABLE
    assert verdict.witness.recompute()
    assert verdict.witness.host_gt.host.n == 3
    assert verdict.witness.host_lt.host.n == 3


def test_same_pattern_is_equal():
    tree = make_oriented_path("+-+")
    assert compare_over_hosts(tree, tree, 3).kind is VerdictKind.EQUAL


def test_mixed_stars_need_three_vertices():
    assert compare_over_hosts(make_star(2, 1), make_star(1, 2), 2).kind is VerdictKind.EQUAL
    verdict = compare_over_hosts(make_star(2, 1), make_star(1, 2), 3)
    assert verdict.kind is VerdictKind.INCOMPARABLE
    assert verdict.witness.recompute()


def test_domination():
    arc, cherry = make_star(0, 1), make_star(0, 2)
    assert compare_over_hosts(arc, cherry, 3).kind is VerdictKind.DOMINATED
    assert compare_over_hosts(cherry, arc, 3).kind is VerdictKind.DOMINATES


def test_long_path_pair_needs_five_vertices():
    verdict = compare_over_hosts(make_oriented_path("+++"), make_oriented_path("+-+"), 4)
    assert verdict.kind is VerdictKind.DOMINATED


def test_witnesses_are_minimal():
    verdict = compare_over_hosts(make_star(0, 3), make_oriented_path("++-"), 3)
    assert verdict.kind is VerdictKind.INCOMPARABLE
    assert verdict.witness.host_gt.index == 1
    assert verdict.witness.host_gt.host.arcs() == [(1, 0)]
    assert verdict.witness.host_gt.counts == (1, 0)


def test_maxorder():
    verdict = compare_maxorder(make_star(0, 3), make_star(3, 0), 3)
    assert verdict.kind is VerdictKind.DOMINATED
    with pytest.raises(TreeError):
        compare_maxorder(make_star(0, 3), make_star(0, 2), 3)


def test_maxorder_against_itself():
    assert compare_maxorder(make_star(0, 3), make_star(0, 3), 3).kind is VerdictKind.DOMINATED
    self_reverse = make_oriented_path("+-+")
    assert compare_maxorder(self_reverse, self_reverse, 3).kind is VerdictKind.EQUAL


@pytest.mark.parametrize("n_max,error", [(0, DigraphError), (6, SizeLimitError)])
def test_sweep_limits(n_max, error):
    with pytest.raises(error):
        compare_over_hosts(make_star(0, 1), make_star(1, 0), n_max)


def test_families():
    assert len(family_trees("trees-k3")) == 8
    assert len(family_trees("trees-k4")) == 27
    assert [t.star_shape() for t in family_trees("stars-h", 3)] == [(0, 3), (1, 2), (2, 1), (3, 0)]
    with pytest.raises(TreeError):
        family_trees("stars-h")
    with pytest.raises(ValueError):
        family_trees("cycles")


def test_family_sweep_pairs():
    verdicts = sweep_family(family_trees("stars-h", 2), 4)
    assert len(verdicts) == 3
    assert all(pv.verdict.kind is VerdictKind.INCOMPARABLE for pv in verdicts)
    assert all(pv.verdict.witness.recompute() for pv in verdicts)
    both_ways = sweep_family(family_trees("stars-h", 2), 4, maxorder=True)
    assert len(both_ways) == 6


def test_isomorphic_patterns_share_counts():
    a = make_oriented_path("++-")
    b = make_oriented_path("+--")
    assert sweep_pairs([(a, b)], 3)[0].kind is VerdictKind.EQUAL


def test_parallel_sweep_matches_serial():
    trees = family_trees("trees-k3")
    serial = [pv.to_dict() for pv in sweep_family(trees, 3, workers=1)]
    parallel = [pv.to_dict() for pv in sweep_family(trees, 3, workers=2)]
    assert serial == parallel


@pytest.mark.slow
def test_every_three_arc_pair_incomparable_at_five():
    verdicts = sweep_family(family_trees("trees-k3"), 5, workers=4)
    assert len(verdicts) == 28
    assert all(pv.verdict.kind is VerdictKind.INCOMPARABLE for pv in verdicts)
    assert all(pv.verdict.witness.recompute() for pv in verdicts)
    paths = {tree_code(make_oriented_path("+++")), tree_code(make_oriented_path("+-+"))}
    for pv in verdicts:
        if {tree_code(pv.a), tree_code(pv.b)} == paths:
            record = pv.verdict.witness
            assert max(record.host_gt.host.n, record.host_lt.host.n) == 5


def test_star_suite_small():
    for h in range(1, 5):
        for m in range(0, 4):
            for n in range(0, 4):
                assert all(r.holds for r in star_incomparability_suite(h, m, n))


@pytest.mark.slow
def test_star_suite_full():
    for h in range(1, 6):
        for m in range(0, 7):
            for n in range(0, 7):
                assert all(r.holds for r in star_incomparability_suite(h, m, n))


def test_star_suite_report_counts():
    reports = star_incomparability_suite(3, 2, 2)
    assert [r.label for r in reports].count("star-on-hmn") == 2
    assert [r.label for r in reports].count("star-pure-host") == 4
    assert [r.label for r in reports].count("star-pure-peak") == 2
    closed = [r for r in reports if r.label == "star-on-hmn"]
    assert [r.lhs for r in closed] == [8, 8]
    with pytest.raises(ValueError):
        star_incomparability_suite(0, 1, 1)
    with pytest.raises(ValueError):
        star_incomparability_suite(2, -1, 1)


def test_star_witness():
    record = construct_star_witness(3, 0, 3)
    assert record is not None
    assert record.recompute()
    assert construct_star_witness(3, 1, 1) is None
    assert construct_star_witness(1, 1, 0) is None
    mixed = construct_star_witness(4, 1, 3)
    assert mixed.host_gt.counts[0] > mixed.host_gt.counts[1]
    assert mixed.host_lt.counts[0] < mixed.host_lt.counts[1]
