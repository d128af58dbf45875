"""
枚举

- 宿主图：n 个顶点上全部 2^{n(n-1)} 个有标号无自环有向图
- 有向树：给定弧数的全部非同构定向树

宿主图编号约定：非对角位置按行优先排列 (0,1),(0,2),…,(n-1,n-2)，
共 L = n(n-1) 个位置；编号 index 的第 (L-1-p) 位为 1 表示第 p 个位置有弧。
编号 0 为空图，编号 2^L - 1 为完全有向图。
"""

import logging
from functools import lru_cache
from typing import Iterator, List, Optional, Tuple

from .canonical import canonical_form, canonical_tree, tree_code
from .graph import Digraph, DigraphError, SizeLimitError
from .trees import RootedDirectedTree, TreeError

logger = logging.getLogger(__name__)

MAX_HOST_VERTICES = 5
MAX_TREE_ARCS = 8


@lru_cache(maxsize=None)
def host_positions(n: int) -> Tuple[Tuple[int, int], ...]:
    """按行优先排列的非对角位置"""
    return tuple((i, j) for i in range(n) for j in range(n) if i != j)


def host_count(n: int) -> int:
    return 1 << (n * (n - 1))


def host_from_index(n: int, index: int) -> Digraph:
    positions = host_positions(n)
    length = len(positions)
    if not 0 <= index < 1 << length:
        raise DigraphError(f"Host index {index} out of range for n={n}")
    rows = [0] * n
    for p, (i, j) in enumerate(positions):
        if index >> (length - 1 - p) & 1:
            rows[i] |= 1 << j
    return Digraph(n, tuple(rows))


def host_index(graph: Digraph) -> int:
    """host_from_index 的逆"""
    index = 0
    for i, j in host_positions(graph.n):
        index = index << 1 | (graph.rows[i] >> j & 1)
    return index


def _check_host_size(n: int) -> None:
    if n < 1:
        raise DigraphError(f"Host size must be positive, got {n}")
    if n > MAX_HOST_VERTICES:
        raise SizeLimitError(
            f"Exhaustive host enumeration supports n <= {MAX_HOST_VERTICES}, got {n}"
        )


def enumerate_hosts(
    n: int,
    canonical: bool = False,
    start: int = 0,
    stop: Optional[int] = None,
) -> Iterator[Digraph]:
    """
    按编号升序枚举 n 顶点宿主图

    Args:
        n: 顶点数（1..5）
        canonical: 为 True 时每个同构类只产出编号最小的代表
        start, stop: 编号区间 [start, stop)，用于并行分片

    Raises:
        SizeLimitError: n > 5
    """
    _check_host_size(n)
    total = host_count(n)
    stop = total if stop is None else min(stop, total)

    seen = set()
    for index in range(max(start, 0), stop):
        graph = host_from_index(n, index)
        if canonical:
            form = canonical_form(graph)
            if form in seen:
                continue
            seen.add(form)
        yield graph


def _free_trees(order: int) -> List[List[Tuple[int, int]]]:
    """order 个顶点上的全部非同构无向树（边列表）"""
    if order == 1:
        return [[]]
    if order == 2:
        return [[(0, 1)]]

    import networkx as nx

    return [sorted(tuple(sorted(e)) for e in g.edges()) for g in nx.nonisomorphic_trees(order)]


def enumerate_directed_trees(k_arcs: int) -> List[RootedDirectedTree]:
    """
    枚举 k_arcs 条弧的全部非同构有向树，每类一个规范代表，按 tree_code 排序

    Raises:
        TreeError: k_arcs < 1
        SizeLimitError: k_arcs > 8
    """
    if k_arcs < 1:
        raise TreeError(f"Trees need at least one arc, got {k_arcs}")
    if k_arcs > MAX_TREE_ARCS:
        raise SizeLimitError(f"Tree enumeration supports up to {MAX_TREE_ARCS} arcs, got {k_arcs}")

    order = k_arcs + 1
    found = {}
    for edges in _free_trees(order):
        for mask in range(1 << k_arcs):
            arcs = [(u, v) if mask >> e & 1 else (v, u) for e, (u, v) in enumerate(edges)]
            tree = RootedDirectedTree.from_arcs(order, arcs)
            code = tree_code(tree)
            if code not in found:
                found[code] = canonical_tree(tree)

    logger.debug(f"Enumerated {len(found)} directed trees with {k_arcs} arcs")
    return [found[code] for code in sorted(found)]


def index_chunks(total: int, workers: int) -> List[Tuple[int, int]]:
    """把 [0, total) 切成至多 workers 段连续区间 (start, stop)，前 rem 段多一个"""
    workers = max(1, min(workers, total)) if total > 0 else 1
    base, rem = divmod(total, workers)
    chunks = []
    start = 0
    for i in range(workers):
        size = base + (1 if i < rem else 0)
        if size > 0:
            chunks.append((start, start + size))
            start += size
    return chunks
