"""
G(n, h) sampler: labels drawn from the block masses, then every ordered pair
i != j becomes an arc independently with probability values[X_i][X_j].
"""

import logging

import numpy as np

from digraph.graph import Digraph, MAX_VERTICES, SizeLimitError
from models.generators import Seed, bool_matrix_to_digraph, make_rng

from .step import KernelError, StepKernel

logger = logging.getLogger(__name__)


def sample_labels(n: int, kernel: StepKernel, rng: np.random.Generator) -> np.ndarray:
    probs = np.array([float(m) for m in kernel.masses])
    probs /= probs.sum()
    return rng.choice(kernel.n, size=n, p=probs)


def sample_gnh(n: int, kernel: StepKernel, seed: Seed) -> Digraph:
    """Loopless inhomogeneous random digraph; a fixed seed fixes the output."""
    if n < 1:
        raise KernelError(f"Sample size must be at least 1, got {n}")
    if n > MAX_VERTICES:
        raise SizeLimitError(f"Digraphs hold at most {MAX_VERTICES} vertices, got {n}")
    rng = make_rng(seed)
    labels = sample_labels(n, kernel, rng)
    table = np.array([[float(x) for x in row] for row in kernel.values])
    mask = rng.random((n, n)) < table[np.ix_(labels, labels)]
    np.fill_diagonal(mask, False)
    return bool_matrix_to_digraph(mask)
