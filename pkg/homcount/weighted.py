"""
Weighted tree counts over nonnegative rational matrices.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Any, List, Sequence, Tuple, Union

from digraph.formats import ParseError
from digraph.graph import Digraph
from digraph.trees import Orientation, RootedDirectedTree

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NonnegMatrix:
    """Square matrix of nonnegative rationals; the diagonal may be nonzero."""
    entries: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise ValueError(f"Matrix row {i} has {len(row)} entries, expected {n}")
            for j, x in enumerate(row):
                if x < 0:
                    raise ValueError(f"Matrix entry ({i},{j}) is negative: {x}")

    @classmethod
    def of(cls, rows: Sequence[Sequence[Any]]) -> "NonnegMatrix":
        return cls(tuple(tuple(Fraction(x) for x in row) for row in rows))

    @classmethod
    def from_digraph(cls, graph: Digraph) -> "NonnegMatrix":
        return cls.of(graph.matrix())

    @property
    def n(self) -> int:
        return len(self.entries)

    @cached_property
    def row_sums(self) -> Tuple[Fraction, ...]:
        return tuple(sum(row, Fraction(0)) for row in self.entries)

    @cached_property
    def col_sums(self) -> Tuple[Fraction, ...]:
        return tuple(
            sum((self.entries[j][i] for j in range(self.n)), Fraction(0)) for i in range(self.n)
        )

    def power_sum(self, p: int) -> Fraction:
        """sum(A^p) = 1^T A^p 1"""
        if p < 0:
            raise ValueError(f"Power must be nonnegative, got {p}")
        vec = [Fraction(1)] * self.n
        for _ in range(p):
            vec = [sum((self.entries[i][j] * vec[j] for j in range(self.n)), Fraction(0)) for i in range(self.n)]
        return sum(vec, Fraction(0))

    def to_rows(self) -> List[List[str]]:
        return [[str(x) for x in row] for row in self.entries]


def hom_weighted(tree: RootedDirectedTree, matrix: NonnegMatrix) -> Fraction:
    """sum over maps of the product of A[phi(u)][phi(v)] over tree arcs u->v."""
    n = matrix.n
    A = matrix.entries
    F: List[List[Fraction]] = [[Fraction(1)] * n for _ in range(tree.k)]
    for c in range(tree.k - 1, 0, -1):
        fc = F[c]
        fp = F[tree.parent[c]]
        out = tree.orient[c] is Orientation.OUT
        for v in range(n):
            if not fp[v]:
                continue
            if out:
                msg = sum((A[v][u] * fc[u] for u in range(n) if A[v][u]), Fraction(0))
            else:
                msg = sum((A[u][v] * fc[u] for u in range(n) if A[u][v]), Fraction(0))
            fp[v] *= msg
    return sum(F[0], Fraction(0))


def parse_rational_rows(lines: List[List[str]], count: int, width: int, what: str) -> List[List[Fraction]]:
    """Parse `count` rows of `width` rationals written as p/q or decimals."""
    if len(lines) != count:
        raise ParseError(f"{what}: expected {count} rows, got {len(lines)}")
    rows = []
    for i, tokens in enumerate(lines):
        if len(tokens) != width:
            raise ParseError(f"{what}: row {i} has {len(tokens)} entries, expected {width}")
        try:
            rows.append([Fraction(t) for t in tokens])
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"{what}: row {i} holds a malformed rational: {' '.join(tokens)!r}")
    return rows


def parse_nonneg_matrix(text: str) -> NonnegMatrix:
    """First line N, then N rows of N rationals."""
    lines = [
        raw.split("#", 1)[0].split()
        for raw in text.splitlines()
        if raw.split("#", 1)[0].strip()
    ]
    if not lines or len(lines[0]) != 1:
        raise ParseError("Matrix file must start with a line holding N")
    try:
        n = int(lines[0][0])
    except ValueError:
        raise ParseError(f"Matrix size must be an integer, got {lines[0][0]!r}")
    rows = parse_rational_rows(lines[1:], n, n, "matrix")
    try:
        return NonnegMatrix.of(rows)
    except ValueError as e:
        raise ParseError(str(e))


def load_nonneg_matrix(path: Union[str, Path]) -> NonnegMatrix:
    path = Path(path)
    if not path.exists():
        raise ParseError(f"Matrix file not found: {path}")
    return parse_nonneg_matrix(path.read_text(encoding="utf-8"))
