"""
Bounds for weighted trees over nonnegative matrices.
"""

import logging
import math
from fractions import Fraction
from typing import Optional, Union

from digraph.trees import RootedDirectedTree
from homcount.weighted import NonnegMatrix, hom_weighted

from .report import BoundReport, exact_report

logger = logging.getLogger(__name__)


def _power_sums(matrix: NonnegMatrix, power: int):
    cols = sum((c ** power for c in matrix.col_sums), Fraction(0))
    rows = sum((r ** power for r in matrix.row_sums), Fraction(0))
    return cols, rows


def exact_sqrt(x: Fraction) -> Optional[Fraction]:
    """Square root of a nonnegative rational when it is rational, else None."""
    num, den = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if num * num == x.numerator and den * den == x.denominator:
        return Fraction(num, den)
    return None


def _sqrt_report(label: str, lhs: Fraction, product: Fraction, details) -> BoundReport:
    """lhs <= sqrt(product), decided as lhs^2 <= product."""
    holds = lhs * lhs <= product
    root = exact_sqrt(product)
    if root is not None:
        return BoundReport(label=label, lhs=lhs, rhs=root, holds=holds, slack=root - lhs, details=details)
    rhs = math.sqrt(product)
    return BoundReport(
        label=label, lhs=lhs, rhs=rhs, holds=holds, slack=rhs - float(lhs),
        exact=False, details=details,
    )


def check_weighted_tree(tree: RootedDirectedTree, matrix: NonnegMatrix) -> BoundReport:
    """hom(T,A) <= max{sum c_i^{k-1}, sum r_i^{k-1}}"""
    lhs = hom_weighted(tree, matrix)
    cols, rows = _power_sums(matrix, tree.k - 1)
    return exact_report(
        "weighted", lhs, max(cols, rows),
        details={"k": tree.k, "sum_col_pow": cols, "sum_row_pow": rows},
    )


def check_mv_path(p: int, matrix: NonnegMatrix) -> BoundReport:
    """sum(A^p) <= (sum c_i^p)^{1/2} (sum r_i^p)^{1/2}"""
    if p < 1:
        raise ValueError(f"Path length must be >= 1, got {p}")
    lhs = matrix.power_sum(p)
    cols, rows = _power_sums(matrix, p)
    details = {"p": p, "sum_col_pow": cols, "sum_row_pow": rows, "max_bound": max(cols, rows)}
    return _sqrt_report("mv-path", lhs, cols * rows, details)


def probe_weighted_sqrt(tree: RootedDirectedTree, matrix: NonnegMatrix) -> BoundReport:
    """
    Records whether hom(T,A) <= (sum c^{k-1})^{1/2} (sum r^{k-1})^{1/2}.
    Only known for paths; for other trees this is data, not a check.
    """
    lhs = hom_weighted(tree, matrix)
    cols, rows = _power_sums(matrix, tree.k - 1)
    return _sqrt_report("weighted-sqrt-probe", lhs, cols * rows, {"k": tree.k})
