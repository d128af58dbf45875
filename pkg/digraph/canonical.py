"""
规范型

- canonical_form: 小有向图（n <= 8）的规范编码，同构当且仅当编码相等
- tree_code / canonical_tree: 有向树的中心有根编码（AHU 风格），用于树的枚举去重与排序
"""

import itertools
import logging
from collections import deque
from typing import Dict, List, Optional, Tuple

from .graph import Digraph, SizeLimitError
from .trees import Orientation, RootedDirectedTree

logger = logging.getLogger(__name__)

MAX_CANONICAL_VERTICES = 8


def canonical_form(graph: Digraph) -> bytes:
    """
    计算有向图的规范编码

    在所有“按 (入度, 出度) 升序排列顶点”的重标号中，取按行展开的邻接位串的最小值。
    度数类的划分是同构不变量，所以结果仍是完全不变量。

    Returns:
        首字节为 n，其后为 n*n 位邻接位串（高位在前）

    Raises:
        SizeLimitError: n > 8
    """
    n = graph.n
    if n > MAX_CANONICAL_VERTICES:
        raise SizeLimitError(f"canonical_form supports n <= {MAX_CANONICAL_VERTICES}, got {n}")

    profile = graph.profile
    keys = sorted(set(zip(profile.deg_in, profile.deg_out)))
    classes = [
        [v for v in range(n) if (profile.deg_in[v], profile.deg_out[v]) == key]
        for key in keys
    ]

    best: Optional[int] = None
    for parts in itertools.product(*(itertools.permutations(c) for c in classes)):
        order = [v for part in parts for v in part]
        value = 0
        for u in order:
            row = graph.rows[u]
            for v in order:
                value = value << 1 | (row >> v & 1)
        if best is None or value < best:
            best = value

    width = (n * n + 7) // 8
    return bytes([n]) + (best or 0).to_bytes(width, "big")


def _centres(tree: RootedDirectedTree) -> List[int]:
    """逐层剥叶得到的中心（1 或 2 个）"""
    if tree.k <= 2:
        return list(range(tree.k))
    degree = [tree.degree(x) for x in range(tree.k)]
    layer = [x for x in range(tree.k) if degree[x] == 1]
    remaining = tree.k
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for leaf in layer:
            for y, _ in tree.neighbors[leaf]:
                degree[y] -= 1
                if degree[y] == 1:
                    nxt.append(y)
        layer = nxt
    return sorted(layer)


def _encode(tree: RootedDirectedTree, root: int) -> Tuple[str, Dict[int, str]]:
    """以 root 为根的子树编码；返回 (整树编码, 每个顶点的子树编码)"""
    parent: Dict[int, Optional[int]] = {root: None}
    order = [root]
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y, _ in tree.neighbors[x]:
            if y not in parent:
                parent[y] = x
                order.append(y)
                queue.append(y)

    codes: Dict[int, str] = {}
    for x in reversed(order):
        parts = []
        for y, o in tree.neighbors[x]:
            if y == parent[x]:
                continue
            parts.append(("o" if o is Orientation.OUT else "i") + codes[y])
        codes[x] = "(" + "".join(sorted(parts)) + ")"
    return codes[root], codes


def tree_code(tree: RootedDirectedTree) -> str:
    """
    有向树的同构不变编码（不依赖根的选择）

    对每个中心求有根编码，取字典序最小者。
    """
    return min(_encode(tree, c)[0] for c in _centres(tree))


def canonical_tree(tree: RootedDirectedTree) -> RootedDirectedTree:
    """
    返回同构类的规范代表：以取得最小编码的中心为根，BFS 编号，子节点按编码排序
    """
    best_code, best_root, best_codes = None, None, None
    for c in _centres(tree):
        code, codes = _encode(tree, c)
        if best_code is None or code < best_code:
            best_code, best_root, best_codes = code, c, codes

    new_id = {best_root: 0}
    parent: List[Optional[int]] = [None]
    orient: List[Optional[Orientation]] = [None]
    queue = deque([best_root])
    while queue:
        x = queue.popleft()
        kids = [
            (("o" if o is Orientation.OUT else "i") + best_codes[y], y, o)
            for y, o in tree.neighbors[x]
            if y not in new_id
        ]
        for _, y, o in sorted(kids, key=lambda t: t[0]):
            new_id[y] = len(parent)
            parent.append(new_id[x])
            orient.append(o)
            queue.append(y)
    return RootedDirectedTree(tuple(parent), tuple(orient))


def trees_isomorphic(a: RootedDirectedTree, b: RootedDirectedTree) -> bool:
    return a.k == b.k and tree_code(a) == tree_code(b)
