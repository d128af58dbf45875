"""
Monte-Carlo Density Convergence

Averages t(Q, G_n) over seeded samples of G(n, h) and compares the mean with
the exact configuration product U_Q(h). Two tracks are kept:

- hom: homomorphism density hom(Q,G)/n^q
- injective: emb(Q,G)/(n)_q, whose expectation is exactly U_Q(h)

The injective mean must land within k standard errors plus a fixed slack; the
hom mean additionally gets b = 1 - (n)_q/n^q for non-injective maps. A failed
check is rerun once with more trials before it is reported.
"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Tuple

import numpy as np

from digraph.enumerate import index_chunks
from digraph.graph import Digraph
from homcount.general import count_maps, hom_components

from .sampler import sample_gnh
from .step import KernelError, StepKernel, config_product

logger = logging.getLogger(__name__)

MAX_PATTERN_VERTICES = 4
MAX_SAMPLE_VERTICES = 40

DEFAULT_STANDARD_ERRORS = 3.0
DEFAULT_SLACK = 0.01
DEFAULT_RERUN_FACTOR = 4


@dataclass
class DensityCheck:
    n: int
    trials: int
    seed: int
    exact: Fraction
    mean_t: float
    mean_inj: float
    std_err: float
    std_err_inj: float
    tolerance: float
    tolerance_inj: float
    bias_bound: float
    rerun: bool = False

    @property
    def abs_err(self) -> float:
        return abs(self.mean_t - float(self.exact))

    @property
    def abs_err_inj(self) -> float:
        return abs(self.mean_inj - float(self.exact))

    @property
    def holds(self) -> bool:
        return self.abs_err <= self.tolerance and self.abs_err_inj <= self.tolerance_inj

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "trials": self.trials,
            "seed": self.seed,
            "U": str(self.exact),
            "mean_t": self.mean_t,
            "abs_err": self.abs_err,
            "std_err": self.std_err,
            "tolerance": self.tolerance,
            "mean_inj": self.mean_inj,
            "abs_err_inj": self.abs_err_inj,
            "std_err_inj": self.std_err_inj,
            "tolerance_inj": self.tolerance_inj,
            "bias_bound": self.bias_bound,
            "rerun": self.rerun,
            "holds": self.holds,
        }


def falling_factorial(n: int, q: int) -> int:
    return math.perm(n, q)


def _trial_chunk(
    pattern: Digraph, kernel: StepKernel, n: int, seed: int, start: int, stop: int,
) -> List[Tuple[float, float]]:
    """(hom density, injective density) for trials [start, stop); trial i uses seed ^ i."""
    q = pattern.n
    hom_norm = n ** q
    inj_norm = falling_factorial(n, q)
    samples = []
    for trial in range(start, stop):
        graph = sample_gnh(n, kernel, seed ^ trial)
        hom = hom_components(pattern, graph)
        emb = count_maps(pattern, graph, injective=True)
        samples.append((hom / hom_norm, emb / inj_norm))
    return samples


def _std_err(values: List[float]) -> float:
    if len(values) < 2:
        return 0.0
    return float(np.std(np.array(values), ddof=1)) / math.sqrt(len(values))


def _run(
    pattern: Digraph, kernel: StepKernel, n: int, trials: int, seed: int, workers: int,
) -> List[Tuple[float, float]]:
    chunks = index_chunks(trials, workers)
    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=len(chunks)) as ex:
            futs = [ex.submit(_trial_chunk, pattern, kernel, n, seed, start, stop) for start, stop in chunks]
            parts = [fut.result() for fut in futs]
    else:
        parts = [_trial_chunk(pattern, kernel, n, seed, start, stop) for start, stop in chunks]
    return [s for part in parts for s in part]


def _evaluate(
    pattern: Digraph,
    kernel: StepKernel,
    exact: Fraction,
    n: int,
    trials: int,
    seed: int,
    workers: int,
    standard_errors: float,
    slack: float,
) -> DensityCheck:
    samples = _run(pattern, kernel, n, trials, seed, workers)
    hom_vals = [s[0] for s in samples]
    inj_vals = [s[1] for s in samples]
    se, se_inj = _std_err(hom_vals), _std_err(inj_vals)
    bias = 1.0 - falling_factorial(n, pattern.n) / n ** pattern.n
    return DensityCheck(
        n=n,
        trials=trials,
        seed=seed,
        exact=exact,
        mean_t=math.fsum(hom_vals) / trials,
        mean_inj=math.fsum(inj_vals) / trials,
        std_err=se,
        std_err_inj=se_inj,
        tolerance=standard_errors * se + slack + bias,
        tolerance_inj=standard_errors * se_inj + slack,
        bias_bound=bias,
    )


def mc_density_check(
    pattern: Digraph,
    kernel: StepKernel,
    n: int,
    trials: int,
    seed: int = 0,
    workers: int = 1,
    standard_errors: float = DEFAULT_STANDARD_ERRORS,
    slack: float = DEFAULT_SLACK,
    rerun_factor: int = DEFAULT_RERUN_FACTOR,
) -> DensityCheck:
    """
    Sampled density means against U_Q(h).

    Args:
        pattern: Pattern Q with at most 4 vertices
        kernel: Step kernel h
        n: Sample size, q <= n <= 40
        trials: Number of samples
        seed: Base seed; trial i samples with seed ^ i
        workers: Process count; the result does not depend on it
        standard_errors: k in the tolerance k*SE + slack
        slack: Fixed additive slack
        rerun_factor: Trial multiplier for the single rerun after a failure

    Returns:
        DensityCheck of the last run performed
    """
    q = pattern.n
    if not 1 <= q <= MAX_PATTERN_VERTICES:
        raise KernelError(f"Monte-Carlo patterns have 1..{MAX_PATTERN_VERTICES} vertices, got {q}")
    if not q <= n <= MAX_SAMPLE_VERTICES:
        raise KernelError(f"Sample size must lie in [{q}, {MAX_SAMPLE_VERTICES}], got {n}")
    if trials < 1:
        raise KernelError(f"Need at least one trial, got {trials}")

    exact = config_product(pattern, kernel)
    check = _evaluate(pattern, kernel, exact, n, trials, seed, workers, standard_errors, slack)
    logger.info(
        f"Density check n={n} trials={trials}: mean {check.mean_t:.6f}, "
        f"injective {check.mean_inj:.6f}, exact {exact}"
    )
    if check.holds or rerun_factor <= 1:
        return check

    logger.warning(f"Density check outside tolerance, rerunning with {trials * rerun_factor} trials")
    check = _evaluate(pattern, kernel, exact, n, trials * rerun_factor, seed, workers, standard_errors, slack)
    check.rerun = True
    return check
