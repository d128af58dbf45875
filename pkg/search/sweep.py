"""
Exhaustive Host Sweeps

Scans every labelled host on 1..n_max vertices in index order and records,
for each pattern pair, the first host where hom(A) > hom(B) and the first
where hom(A) < hom(B). Witnesses are minimal in (n, index); index ranges are
scanned in chunks that may run in parallel and are merged in order, so the
worker count never changes a result.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from digraph.canonical import tree_code
from digraph.enumerate import MAX_HOST_VERTICES, enumerate_directed_trees, host_count, host_from_index, index_chunks
from digraph.formats import tree_literal
from digraph.graph import DigraphError, SizeLimitError
from digraph.trees import RootedDirectedTree, TreeError, make_star
from homcount.tree import hom_tree

from .verdict import HostWitness, OrderVerdict, VerdictKind, WitnessRecord

logger = logging.getLogger(__name__)

CHUNKS_PER_WORKER = 8

# (pair id, pattern index of A, pattern index of B, pattern index of B reversed or None)
PairSpec = Tuple[int, int, int, Optional[int]]
Hit = Optional[Tuple[int, Tuple[int, int]]]


@dataclass
class PairVerdict:
    a: RootedDirectedTree
    b: RootedDirectedTree
    verdict: OrderVerdict

    def to_dict(self):
        return {"pair": [tree_literal(self.a), tree_literal(self.b)], **self.verdict.to_dict()}


def _scan_chunk(
    n: int,
    start: int,
    stop: int,
    patterns: Sequence[RootedDirectedTree],
    pairs: Sequence[PairSpec],
) -> Dict[int, List[Hit]]:
    """First (index, counts) hits per pair inside [start, stop)."""
    hits: Dict[int, List[Hit]] = {pid: [None, None] for pid, _, _, _ in pairs}
    open_pairs = list(pairs)
    for index in range(start, stop):
        if not open_pairs:
            break
        host = host_from_index(n, index)
        cache: Dict[int, int] = {}

        def count(i: int) -> int:
            if i not in cache:
                cache[i] = hom_tree(patterns[i], host)
            return cache[i]

        still_open = []
        for entry in open_pairs:
            pid, ia, ib, irev = entry
            first = count(ia)
            second = count(ib) if irev is None else max(count(ib), count(irev))
            slot = hits[pid]
            if first > second and slot[0] is None:
                slot[0] = (index, (first, second))
            elif first < second and slot[1] is None:
                slot[1] = (index, (first, second))
            if slot[0] is None or slot[1] is None:
                still_open.append(entry)
        open_pairs = still_open
    return hits


def _check_nmax(n_max: int) -> None:
    if n_max < 1:
        raise DigraphError(f"n_max must be at least 1, got {n_max}")
    if n_max > MAX_HOST_VERTICES:
        raise SizeLimitError(f"Host sweeps support n_max <= {MAX_HOST_VERTICES}, got {n_max}")


def sweep_pairs(
    pairs: Sequence[Tuple[RootedDirectedTree, RootedDirectedTree]],
    n_max: int,
    workers: int = 1,
    maxorder: bool = False,
) -> List[OrderVerdict]:
    """
    Verdicts for many pattern pairs from a single pass over the hosts.

    Isomorphic patterns share one count per host.
    """
    _check_nmax(n_max)

    patterns: List[RootedDirectedTree] = []
    slot_of: Dict[str, int] = {}

    def pattern_index(tree: RootedDirectedTree) -> int:
        code = tree_code(tree)
        if code not in slot_of:
            slot_of[code] = len(patterns)
            patterns.append(tree)
        return slot_of[code]

    specs: List[PairSpec] = []
    for pid, (a, b) in enumerate(pairs):
        if maxorder and a.k != b.k:
            raise TreeError(f"Max-order comparison needs patterns of equal size, got {a.k} and {b.k}")
        irev = pattern_index(b.reverse()) if maxorder else None
        specs.append((pid, pattern_index(a), pattern_index(b), irev))
    logger.debug(f"{len(pairs)} pair(s) over {len(patterns)} distinct pattern(s)")

    found: Dict[int, List[Optional[HostWitness]]] = {pid: [None, None] for pid, _, _, _ in specs}

    for n in range(1, n_max + 1):
        pending = [s for s in specs if found[s[0]][0] is None or found[s[0]][1] is None]
        if not pending:
            break
        total = host_count(n)
        logger.info(f"Sweeping {total} hosts on {n} vertices for {len(pending)} open pair(s)")

        def merge(hits: Dict[int, List[Hit]]) -> None:
            for pid, (gt, lt) in hits.items():
                slot = found[pid]
                if slot[0] is None and gt is not None:
                    slot[0] = HostWitness(host_from_index(n, gt[0]), gt[1], gt[0])
                if slot[1] is None and lt is not None:
                    slot[1] = HostWitness(host_from_index(n, lt[0]), lt[1], lt[0])

        def resolved() -> bool:
            return all(found[s[0]][0] is not None and found[s[0]][1] is not None for s in pending)

        if workers > 1 and total > 1:
            chunks = index_chunks(total, workers * CHUNKS_PER_WORKER)
            with ProcessPoolExecutor(max_workers=workers) as ex:
                futs = [ex.submit(_scan_chunk, n, start, stop, patterns, pending) for start, stop in chunks]
                for fut in futs:
                    merge(fut.result())
                    if resolved():
                        for rest in futs:
                            rest.cancel()
                        break
        else:
            merge(_scan_chunk(n, 0, total, patterns, pending))

    verdicts = []
    for pid, (a, b) in enumerate(pairs):
        gt, lt = found[pid]
        if gt is not None and lt is not None:
            record = WitnessRecord(a=a, b=b, host_gt=gt, host_lt=lt, maxorder=maxorder)
            verdicts.append(OrderVerdict(VerdictKind.INCOMPARABLE, n_max, record))
        elif gt is not None:
            verdicts.append(OrderVerdict(VerdictKind.DOMINATES, n_max))
        elif lt is not None:
            verdicts.append(OrderVerdict(VerdictKind.DOMINATED, n_max))
        else:
            verdicts.append(OrderVerdict(VerdictKind.EQUAL, n_max))
    return verdicts


def compare_over_hosts(
    a: RootedDirectedTree,
    b: RootedDirectedTree,
    n_max: int,
    workers: int = 1,
) -> OrderVerdict:
    return sweep_pairs([(a, b)], n_max, workers)[0]


def compare_maxorder(
    t: RootedDirectedTree,
    s: RootedDirectedTree,
    n_max: int,
    workers: int = 1,
) -> OrderVerdict:
    """
    Compare hom(T,H) against max{hom(S,H), hom(S^rev,H)}.

    With S = T the verdict is EQUAL only when T is isomorphic to its reverse;
    otherwise a host where the reverse counts more makes it DOMINATED.
    """
    return sweep_pairs([(t, s)], n_max, workers, maxorder=True)[0]


def family_trees(family: str, h: Optional[int] = None) -> List[RootedDirectedTree]:
    """Pattern families: trees-k3, trees-k4, stars-h (all stars with h arcs)."""
    if family == "trees-k3":
        return enumerate_directed_trees(3)
    if family == "trees-k4":
        return enumerate_directed_trees(4)
    if family == "stars-h":
        if h is None or h < 1:
            raise TreeError("The stars-h family needs h >= 1")
        return [make_star(a, h - a) for a in range(h + 1)]
    raise ValueError(f"Unknown pattern family {family!r}")


def sweep_family(
    trees: Sequence[RootedDirectedTree],
    n_max: int,
    workers: int = 1,
    maxorder: bool = False,
) -> List[PairVerdict]:
    """All unordered pairs i < j; under the max order both directions are swept."""
    pairs = []
    for i in range(len(trees)):
        for j in range(i + 1, len(trees)):
            pairs.append((trees[i], trees[j]))
            if maxorder:
                pairs.append((trees[j], trees[i]))
    verdicts = sweep_pairs(pairs, n_max, workers, maxorder)
    return [PairVerdict(a, b, v) for (a, b), v in zip(pairs, verdicts)]
