"""
有向图核心类型

无自环简单有向图，邻接矩阵按行存为位掩码（每行一个 64 位字）：
- 出度 / 入度 / 总度数
- 反转、重标号、弱连通分量
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, Iterable, List, Sequence, Tuple

logger = logging.getLogger(__name__)

MAX_VERTICES = 64


class DigraphError(ValueError):
    """Exception raised for malformed digraphs and invalid vertex references."""
    pass


class SizeLimitError(DigraphError):
    """Exception raised when an operation is asked to exceed its size ceiling."""
    pass


@dataclass(frozen=True)
class DegreeProfile:
    """每个顶点的 (入度, 出度, 总度数)"""
    deg_in: Tuple[int, ...]
    deg_out: Tuple[int, ...]

    @property
    def total(self) -> Tuple[int, ...]:
        return tuple(i + o for i, o in zip(self.deg_in, self.deg_out))

    def to_dict(self) -> Dict[str, List[int]]:
        return {
            "deg_in": list(self.deg_in),
            "deg_out": list(self.deg_out),
            "total": list(self.total),
        }


@dataclass(frozen=True)
class Digraph:
    """
    无自环简单有向图

    rows[i] 的第 j 位为 1 当且仅当存在弧 i→j。
    """
    n: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise SizeLimitError(f"Digraph supports 0..{MAX_VERTICES} vertices, got {self.n}")
        if len(self.rows) != self.n:
            raise DigraphError(f"Expected {self.n} adjacency rows, got {len(self.rows)}")

        full = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row < 0 or row & ~full:
                raise DigraphError(f"Row {i} references vertices outside 0..{self.n - 1}")
            if row >> i & 1:
                raise DigraphError(f"Loop at vertex {i}: digraphs must be loopless")

    @classmethod
    def empty(cls, n: int) -> "Digraph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Digraph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << i) for i in range(n)))

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Tuple[int, int]]) -> "Digraph":
        rows = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise DigraphError(f"Arc {u}->{v} out of range for n={n}")
            rows[u] |= 1 << v
        return cls(n, tuple(rows))

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[Any]]) -> "Digraph":
        n = len(matrix)
        rows = []
        for i, line in enumerate(matrix):
            if len(line) != n:
                raise DigraphError(f"Matrix row {i} has {len(line)} entries, expected {n}")
            row = 0
            for j, entry in enumerate(line):
                if entry not in (0, 1, True, False):
                    raise DigraphError(f"Matrix entry ({i},{j}) must be 0 or 1, got {entry!r}")
                if entry:
                    row |= 1 << j
            rows.append(row)
        return cls(n, tuple(rows))

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def arcs(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in range(self.n) if self.rows[u] >> v & 1]

    @property
    def arc_count(self) -> int:
        return sum(bin(row).count("1") for row in self.rows)

    @cached_property
    def cols(self) -> Tuple[int, ...]:
        """cols[j] 的第 i 位为 1 当且仅当存在弧 i→j"""
        cols = [0] * self.n
        for u, v in self.arcs():
            cols[v] |= 1 << u
        return tuple(cols)

    @cached_property
    def out_lists(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(_bits(row) for row in self.rows)

    @cached_property
    def in_lists(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(_bits(col) for col in self.cols)

    def out_neighbors(self, v: int) -> Tuple[int, ...]:
        self.check_vertex(v)
        return self.out_lists[v]

    def in_neighbors(self, v: int) -> Tuple[int, ...]:
        self.check_vertex(v)
        return self.in_lists[v]

    def deg_out(self, v: int) -> int:
        return len(self.out_neighbors(v))

    def deg_in(self, v: int) -> int:
        return len(self.in_neighbors(v))

    def degree(self, v: int) -> int:
        """总度数 d(v) = deg_in(v) + deg_out(v)"""
        return self.deg_in(v) + self.deg_out(v)

    @cached_property
    def profile(self) -> DegreeProfile:
        return DegreeProfile(
            deg_in=tuple(len(x) for x in self.in_lists),
            deg_out=tuple(len(x) for x in self.out_lists),
        )

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise DigraphError(f"Vertex {v!r} out of range for n={self.n}")

    def reverse(self) -> "Digraph":
        return Digraph(self.n, self.cols)

    def relabel(self, perm: Sequence[int]) -> "Digraph":
        """按 perm[旧标号] = 新标号 重标号"""
        if sorted(perm) != list(range(self.n)):
            raise DigraphError(f"Not a permutation of 0..{self.n - 1}: {list(perm)}")
        return Digraph.from_arcs(self.n, ((perm[u], perm[v]) for u, v in self.arcs()))

    def induced(self, vertices: Sequence[int]) -> "Digraph":
        """诱导子图，顶点按给定顺序重新编号为 0..len-1"""
        index = {v: i for i, v in enumerate(vertices)}
        return Digraph.from_arcs(
            len(vertices),
            ((index[u], index[v]) for u, v in self.arcs() if u in index and v in index),
        )

    def components(self) -> List[List[int]]:
        """弱连通分量，按最小顶点排序"""
        seen = 0
        result = []
        for start in range(self.n):
            if seen >> start & 1:
                continue
            comp = []
            stack = [start]
            seen |= 1 << start
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in _bits((self.rows[x] | self.cols[x]) & ~seen):
                    seen |= 1 << y
                    stack.append(y)
            result.append(sorted(comp))
        return result

    def is_weakly_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def matrix(self) -> List[List[int]]:
        return [[self.rows[i] >> j & 1 for j in range(self.n)] for i in range(self.n)]

    def to_networkx(self):
        import networkx as nx

        g = nx.DiGraph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.arcs())
        return g

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "matrix": self.matrix()}

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.arcs()})"


def _bits(mask: int) -> Tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)
