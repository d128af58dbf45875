"""
General Homomorphism Counting

Backtracking over pattern vertices in BFS order. Each placed vertex narrows
the candidate set of its later neighbours to an out-row or in-column bitmask
of the host, so the last level is a popcount.
"""

import logging
from collections import deque
from typing import List, Optional, Tuple

from digraph.graph import Digraph, DigraphError
from digraph.trees import RootedDirectedTree

logger = logging.getLogger(__name__)

# (earlier position, True if earlier -> current)
Constraint = Tuple[int, bool]


def _search_order(pattern: Digraph, root: int = 0) -> List[int]:
    """BFS order over the underlying graph, then any remaining components."""
    seen = {root}
    order = [root]
    queue = deque([root])
    starts = iter(range(pattern.n))
    while len(order) < pattern.n:
        while queue:
            x = queue.popleft()
            for y in pattern.out_lists[x] + pattern.in_lists[x]:
                if y not in seen:
                    seen.add(y)
                    order.append(y)
                    queue.append(y)
        for s in starts:
            if s not in seen:
                seen.add(s)
                order.append(s)
                queue.append(s)
                break
    return order


def _constraints(pattern: Digraph, order: List[int]) -> List[List[Constraint]]:
    position = {v: i for i, v in enumerate(order)}
    result: List[List[Constraint]] = []
    for i, v in enumerate(order):
        cons = []
        for u in pattern.in_lists[v]:
            if position[u] < i:
                cons.append((position[u], True))
        for w in pattern.out_lists[v]:
            if position[w] < i:
                cons.append((position[w], False))
        result.append(cons)
    return result


def count_maps(
    pattern: Digraph,
    host: Digraph,
    injective: bool = False,
    root: int = 0,
    root_image: Optional[int] = None,
    allowed: Optional[int] = None,
) -> int:
    """
    Count arc-preserving maps V(pattern) -> V(host).

    Args:
        pattern: Pattern digraph; may be disconnected
        host: Host digraph
        injective: Count only injective maps
        root: Pattern vertex searched first
        root_image: If given, pin root to this host vertex
        allowed: Bitmask of host vertices allowed for non-root pattern vertices

    Returns:
        Exact count
    """
    if pattern.n == 0:
        return 1
    if host.n == 0:
        return 0

    order = _search_order(pattern, root)
    cons = _constraints(pattern, order)
    rows, cols = host.rows, host.cols
    full = (1 << host.n) - 1
    others = full if allowed is None else allowed & full
    image = [0] * pattern.n
    last = pattern.n - 1

    def candidates(i: int, used: int) -> int:
        mask = full if i == 0 else others
        for j, forward in cons[i]:
            mask &= rows[image[j]] if forward else cols[image[j]]
            if not mask:
                return 0
        if injective:
            mask &= ~used
        return mask

    def extend(i: int, used: int) -> int:
        mask = candidates(i, used)
        if i == last:
            return bin(mask).count("1")
        total = 0
        while mask:
            low = mask & -mask
            image[i] = low.bit_length() - 1
            total += extend(i + 1, used | low)
            mask ^= low
        return total

    if root_image is not None:
        host.check_vertex(root_image)
        image[0] = root_image
        if last == 0:
            return 1
        return extend(1, 1 << root_image)
    return extend(0, 0)


def _require_connected(pattern: Digraph) -> None:
    if pattern.n == 0 or not pattern.is_weakly_connected():
        raise DigraphError(
            "Pattern must be weakly connected; use hom_components for disconnected patterns"
        )


def hom_general(pattern: Digraph, host: Digraph) -> int:
    """Number of homomorphisms from a weakly connected pattern into host."""
    _require_connected(pattern)
    return count_maps(pattern, host)


def emb_injective(pattern: Digraph, host: Digraph) -> int:
    """Number of injective homomorphisms from a weakly connected pattern into host."""
    _require_connected(pattern)
    return count_maps(pattern, host, injective=True)


def hom_components(pattern: Digraph, host: Digraph) -> int:
    """Homomorphism count for any pattern: the product over its weak components."""
    total = 1
    for comp in pattern.components():
        total *= count_maps(pattern.induced(comp), host)
        if total == 0:
            break
    return total


def emb_rooted(tree: RootedDirectedTree, host: Digraph, v: int) -> int:
    """Injective homomorphisms of a tree with its root sent to v."""
    return count_maps(tree.to_digraph(), host, injective=True, root=0, root_image=v)


def embtrunc_rooted(tree: RootedDirectedTree, host: Digraph, v: int, delta: int) -> int:
    """As emb_rooted, but every non-root vertex must land on total degree < delta."""
    degrees = host.profile.total
    allowed = 0
    for u, d in enumerate(degrees):
        if d < delta:
            allowed |= 1 << u
    return count_maps(tree.to_digraph(), host, injective=True, root=0, root_image=v, allowed=allowed)
