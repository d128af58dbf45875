from fractions import Fraction

import pytest
from hypothesis import given

from digraph.formats import ParseError
from digraph.trees import make_oriented_path, make_star
from homcount.tree import hom_tree
from homcount.weighted import NonnegMatrix, hom_weighted, load_nonneg_matrix, parse_nonneg_matrix
from strategies import nonneg_matrices


def test_zero_one_matrix_counts_homomorphisms(small_trees, five_vertex_host):
    matrix = NonnegMatrix.from_digraph(five_vertex_host)
    for tree in small_trees:
        assert hom_weighted(tree, matrix) == hom_tree(tree, five_vertex_host)


@given(nonneg_matrices(max_n=3))
def test_scaling(matrix):
    tree = make_oriented_path("+-+")
    scaled = NonnegMatrix.of([[Fraction(1, 2) * x for x in row] for row in matrix.entries])
    assert hom_weighted(tree, scaled) == Fraction(1, 8) * hom_weighted(tree, matrix)


@given(nonneg_matrices())
def test_directed_path_is_power_sum(matrix):
    for p in range(1, 4):
        assert matrix.power_sum(p) == hom_weighted(make_oriented_path("+" * p), matrix)


def test_diagonal_allowed():
    matrix = NonnegMatrix.of([[2]])
    assert hom_weighted(make_star(1, 1), matrix) == 4


def test_sums():
    matrix = NonnegMatrix.of([[0, "1/2"], [3, 1]])
    assert matrix.row_sums == (Fraction(1, 2), Fraction(4))
    assert matrix.col_sums == (Fraction(3), Fraction(3, 2))
    assert matrix.power_sum(0) == 2
    with pytest.raises(ValueError):
        matrix.power_sum(-1)


def test_matrix_validation():
    with pytest.raises(ValueError):
        NonnegMatrix.of([[0, 1]])
    with pytest.raises(ValueError):
        NonnegMatrix.of([[-1]])


def test_parse_matrix():
    matrix = parse_nonneg_matrix("# rational entries\n2\n1/2 0\n0.5 3\n")
    assert matrix.entries == ((Fraction(1, 2), Fraction(0)), (Fraction(1, 2), Fraction(3)))
    assert matrix.to_rows() == [["1/2", "0"], ["1/2", "3"]]


@pytest.mark.parametrize("text", ["", "2 2\n", "x\n", "2\n1 0\n", "2\n1 0\n0 a\n", "1\n-1\n", "1\n1/0\n"])
def test_malformed_matrices(text):
    with pytest.raises(ParseError):
        parse_nonneg_matrix(text)


def test_load_matrix(tmp_path):
    path = tmp_path / "a.mat"
    path.write_text("1\n3/4\n", encoding="utf-8")
    assert load_nonneg_matrix(path).entries == ((Fraction(3, 4),),)
    with pytest.raises(ParseError):
        load_nonneg_matrix(tmp_path / "missing.mat")
