"""
Random and structured digraph generators.

Property suites draw instances from a `random.Random`; anything that samples
edges or degrees goes through a numpy Generator seeded with PCG64 so a seed
pins the output bit for bit.
"""

import logging
import random
from fractions import Fraction
from typing import Optional, Sequence, Union

import numpy as np

from digraph.graph import Digraph, SizeLimitError, MAX_VERTICES
from digraph.trees import Orientation, RootedDirectedTree
from homcount.tree import WeightVector
from homcount.weighted import NonnegMatrix

logger = logging.getLogger(__name__)

Seed = Union[int, np.random.Generator]


def make_rng(seed: Seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.PCG64(int(seed) & ((1 << 64) - 1)))


def bool_matrix_to_digraph(mask: np.ndarray) -> Digraph:
    n = mask.shape[0]
    rows = []
    for i in range(n):
        row = 0
        for j in np.flatnonzero(mask[i]):
            if j != i:
                row |= 1 << int(j)
        rows.append(row)
    return Digraph(n, tuple(rows))


def gen_erdos_renyi_digraph(n: int, p: float, seed: Seed) -> Digraph:
    """Each ordered pair i != j is an arc independently with probability p."""
    if n > MAX_VERTICES:
        raise SizeLimitError(f"Digraphs hold at most {MAX_VERTICES} vertices, got {n}")
    if not 0 <= p <= 1:
        raise ValueError(f"Arc probability must lie in [0, 1], got {p}")
    rng = make_rng(seed)
    mask = rng.random((n, n)) < p
    np.fill_diagonal(mask, False)
    return bool_matrix_to_digraph(mask)


def star_host(m: int, n: int) -> Digraph:
    """
    H_{m,n}: centre 0 with m sources pointing into it and n sinks it points to.
    Sources are 1..m, sinks m+1..m+n.
    """
    if m < 0 or n < 0:
        raise ValueError(f"Star host needs m, n >= 0, got ({m}, {n})")
    arcs = [(s, 0) for s in range(1, m + 1)] + [(0, t) for t in range(m + 1, m + n + 1)]
    return Digraph.from_arcs(m + n + 1, arcs)


def random_tree(k: int, rng: random.Random) -> RootedDirectedTree:
    """Random recursive tree on k vertices with uniformly random arc directions."""
    if k < 1:
        raise ValueError(f"Tree size must be positive, got {k}")
    parent = (None,) + tuple(rng.randrange(i) for i in range(1, k))
    orient = (None,) + tuple(rng.choice((Orientation.OUT, Orientation.IN)) for _ in range(1, k))
    return RootedDirectedTree(parent, orient)


def random_digraph(n_max: int, rng: random.Random, n_min: int = 1) -> Digraph:
    """Erdős–Rényi digraph with random size in [n_min, n_max] and random density."""
    n = rng.randint(n_min, n_max)
    p = rng.random()
    return gen_erdos_renyi_digraph(n, p, rng.getrandbits(63))


def random_weights(k: int, rng: random.Random, choices: Sequence[int] = (0, 1, 2)) -> WeightVector:
    return WeightVector.of([rng.choice(choices) for _ in range(k)])


def random_nonneg_matrix(
    n: int,
    rng: random.Random,
    max_entry: int = 3,
    denominators: Sequence[int] = (1, 2, 3, 4),
    zero_prob: float = 0.3,
) -> NonnegMatrix:
    """Rational entries in [0, max_entry]; diagonal allowed."""
    rows = []
    for _ in range(n):
        row = []
        for _ in range(n):
            if rng.random() < zero_prob:
                row.append(Fraction(0))
            else:
                den = rng.choice(denominators)
                row.append(Fraction(rng.randint(0, max_entry * den), den))
        rows.append(row)
    return NonnegMatrix.of(rows)


def sample_seed(seed: int, index: int) -> int:
    """Per-item seed: the base seed xor the item index."""
    return (int(seed) ^ int(index)) & ((1 << 64) - 1)


def instance_rng(seed: int, index: int, salt: Optional[str] = None) -> random.Random:
    """Deterministic per-instance generator for sharded suites."""
    return random.Random(f"{salt or 'dihom'}:{seed}:{index}")
