"""
有向树模式

有根有向树用父数组 + 每条弧的方向标记表示：
- parent[0] 为空（顶点 0 为根），i >= 1 时 parent[i] < i
- orient[i] = OUT 表示弧 parent[i]→i，IN 表示 i→parent[i]

构造函数：星图 S_{a,b}、定向路径 P_{±±±}、弧列表
"""

import logging
from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .graph import Digraph, DigraphError

logger = logging.getLogger(__name__)


class TreeError(DigraphError):
    """Exception raised for invalid tree patterns or tree vertex references."""
    pass


class Orientation(str, Enum):
    OUT = "out"  # parent -> child
    IN = "in"    # child -> parent


@dataclass(frozen=True)
class RootedDirectedTree:
    """有根有向树（顶点 0 为根）"""
    parent: Tuple[Optional[int], ...]
    orient: Tuple[Optional[Orientation], ...]

    def __post_init__(self):
        k = len(self.parent)
        if k < 1:
            raise TreeError("A tree needs at least one vertex")
        if len(self.orient) != k:
            raise TreeError(f"orient has {len(self.orient)} entries, expected {k}")
        if self.parent[0] is not None or self.orient[0] is not None:
            raise TreeError("Vertex 0 is the root and must have no parent")
        for i in range(1, k):
            p = self.parent[i]
            if p is None or not 0 <= p < i:
                raise TreeError(f"parent[{i}] must satisfy 0 <= parent < {i}, got {p}")
            if not isinstance(self.orient[i], Orientation):
                raise TreeError(f"orient[{i}] must be an Orientation, got {self.orient[i]!r}")

    @property
    def k(self) -> int:
        return len(self.parent)

    @classmethod
    def from_arcs(cls, k: int, arcs: Iterable[Tuple[int, int]], root: int = 0) -> "RootedDirectedTree":
        """
        从弧列表构造树，以 root 为根按 BFS 重新编号（子节点按原标号升序）

        Raises:
            TreeError: 弧数不是 k-1、含重复边或不连通
        """
        arcs = list(arcs)
        if not 0 <= root < k:
            raise TreeError(f"Root {root} out of range for k={k}")
        if len(arcs) != k - 1:
            raise TreeError(f"A tree on {k} vertices has {k - 1} arcs, got {len(arcs)}")

        nbrs: Dict[int, List[Tuple[int, Orientation]]] = {v: [] for v in range(k)}
        for u, v in arcs:
            if not (0 <= u < k and 0 <= v < k) or u == v:
                raise TreeError(f"Invalid arc {u}->{v} for k={k}")
            nbrs[u].append((v, Orientation.OUT))
            nbrs[v].append((u, Orientation.IN))

        order = [root]
        new_id = {root: 0}
        parent: List[Optional[int]] = [None]
        orient: List[Optional[Orientation]] = [None]
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, o in sorted(nbrs[x]):
                if y in new_id:
                    if parent[new_id[x]] is not None and order[parent[new_id[x]]] == y:
                        continue
                    raise TreeError("Arc list contains a cycle or a repeated edge")
                new_id[y] = len(order)
                order.append(y)
                parent.append(new_id[x])
                orient.append(o)
                queue.append(y)

        if len(order) != k:
            raise TreeError("Arc list is not connected")
        return cls(tuple(parent), tuple(orient))

    @classmethod
    def from_digraph(cls, graph: Digraph, root: int = 0) -> "RootedDirectedTree":
        """底图为树的有向图转换为有根树"""
        if graph.n == 0:
            raise TreeError("Empty digraph is not a tree")
        return cls.from_arcs(graph.n, graph.arcs(), root=root)

    def arcs(self) -> List[Tuple[int, int]]:
        result = []
        for c in range(1, self.k):
            p = self.parent[c]
            result.append((p, c) if self.orient[c] is Orientation.OUT else (c, p))
        return result

    @cached_property
    def children(self) -> Tuple[Tuple[int, ...], ...]:
        ch: List[List[int]] = [[] for _ in range(self.k)]
        for c in range(1, self.k):
            ch[self.parent[c]].append(c)
        return tuple(tuple(x) for x in ch)

    def ch_out(self, x: int) -> Tuple[int, ...]:
        self.check_vertex(x)
        return tuple(c for c in self.children[x] if self.orient[c] is Orientation.OUT)

    def ch_in(self, x: int) -> Tuple[int, ...]:
        self.check_vertex(x)
        return tuple(c for c in self.children[x] if self.orient[c] is Orientation.IN)

    @cached_property
    def neighbors(self) -> Tuple[Tuple[Tuple[int, Orientation], ...], ...]:
        """底图邻居及方向：(y, OUT) 表示 x→y"""
        nbrs: List[List[Tuple[int, Orientation]]] = [[] for _ in range(self.k)]
        for u, v in self.arcs():
            nbrs[u].append((v, Orientation.OUT))
            nbrs[v].append((u, Orientation.IN))
        return tuple(tuple(sorted(x)) for x in nbrs)

    def degree(self, x: int) -> int:
        return len(self.neighbors[x])

    def leaves(self) -> List[int]:
        """总度数为 1 的顶点"""
        return [x for x in range(self.k) if self.degree(x) == 1]

    def check_vertex(self, x: int) -> None:
        if not isinstance(x, int) or not 0 <= x < self.k:
            raise TreeError(f"Tree vertex {x!r} out of range for k={self.k}")

    def to_digraph(self) -> Digraph:
        return Digraph.from_arcs(self.k, self.arcs())

    def reverse(self) -> "RootedDirectedTree":
        flipped = tuple(
            None if o is None else (Orientation.IN if o is Orientation.OUT else Orientation.OUT)
            for o in self.orient
        )
        return RootedDirectedTree(self.parent, flipped)

    def reroot(self, root: int) -> "RootedDirectedTree":
        self.check_vertex(root)
        return RootedDirectedTree.from_arcs(self.k, self.arcs(), root=root)

    def star_shape(self) -> Optional[Tuple[int, int]]:
        """若为星图 S_{a,b} 返回 (a, b)：中心有 a 条入弧、b 条出弧"""
        if self.k == 1:
            return None
        if self.k == 2:
            return (0, 1)
        centres = [x for x in range(self.k) if self.degree(x) > 1]
        if len(centres) != 1:
            return None
        c = centres[0]
        a = sum(1 for _, o in self.neighbors[c] if o is Orientation.IN)
        return (a, self.k - 1 - a)

    def __repr__(self) -> str:
        arcs = ",".join(f"{u}>{v}" for u, v in self.arcs())
        return f"RootedDirectedTree(k={self.k}, arcs={arcs or '-'})"


def make_star(a: int, b: int) -> RootedDirectedTree:
    """
    构造星图 S_{a,b}：中心（根，顶点 0）有 a 片入叶、b 片出叶

    Raises:
        TreeError: a + b = 0 或参数为负
    """
    if a < 0 or b < 0:
        raise TreeError(f"Star leaf counts must be nonnegative, got ({a}, {b})")
    if a + b == 0:
        raise TreeError("Degenerate star: S_{0,0} has no arcs")
    parent = (None,) + (0,) * (a + b)
    orient = (None,) + (Orientation.IN,) * a + (Orientation.OUT,) * b
    return RootedDirectedTree(parent, orient)


def make_oriented_path(signs: Sequence[str]) -> RootedDirectedTree:
    """
    构造定向路径 v0-v1-...-vℓ，signs[i] 为 '+' 表示 v_i→v_{i+1}，'-' 表示 v_{i+1}→v_i

    Raises:
        TreeError: 符号序列为空或含非法符号
    """
    signs = list(signs)
    if not signs:
        raise TreeError("An oriented path needs at least one sign")
    orient: List[Optional[Orientation]] = [None]
    for i, s in enumerate(signs):
        if s in ("+", "→"):
            orient.append(Orientation.OUT)
        elif s in ("-", "−", "←"):
            orient.append(Orientation.IN)
        else:
            raise TreeError(f"Invalid path sign at position {i}: {s!r}")
    parent = (None,) + tuple(range(len(signs)))
    return RootedDirectedTree(parent, tuple(orient))
