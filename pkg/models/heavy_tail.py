"""
Heavy-tailed two-path experiment

A root with out-degree d has d out-neighbours whose own out-degrees D_u are
i.i.d. discrete Pareto: P(D = j) ∝ j^{-(1+tau)} for j = 1..truncation. The
number of directed 2-walks from the root is hom = sum_u D_u. For every sample
we check hom against the l^p envelope d^{1-1/p} (sum_u D_u^p)^{1/p}, and over
all samples we compare the empirical E[hom^r] with d * E[D^r].
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Union

import numpy as np

from inequalities.report import GUARD_BAND

from .generators import make_rng

logger = logging.getLogger(__name__)

DEFAULT_TRUNCATION = 10 ** 6
DEFAULT_SLACK = 0.05

Rational = Union[Fraction, float, int, str]


class ExperimentError(ValueError):
    """Exception raised for experiment parameters outside their valid range."""
    pass


@dataclass
class HeavyTailReport:
    d_root: int
    tail_exponent: float
    r: float
    p: float
    samples: int
    seed: int
    truncation: int
    envelope_violations: int
    mean_hom_r: float
    mean_degree_r: float
    subadditive_bound: float
    subadditive_ratio: float
    normalised_ratio: float
    slack: float

    @property
    def envelope_holds(self) -> bool:
        return self.envelope_violations == 0

    @property
    def moment_holds(self) -> bool:
        return self.mean_hom_r <= self.subadditive_bound * (1 + self.slack)

    @property
    def holds(self) -> bool:
        return self.envelope_holds and self.moment_holds

    def to_dict(self) -> Dict[str, Any]:
        return {
            "experiment": "heavy-tail",
            "params": {
                "d_root": self.d_root,
                "tail_exponent": self.tail_exponent,
                "r": self.r,
                "p": self.p,
                "samples": self.samples,
                "seed": self.seed,
                "truncation": self.truncation,
                "slack": self.slack,
            },
            "envelope_violations": self.envelope_violations,
            "mean_hom_r": self.mean_hom_r,
            "mean_degree_r": self.mean_degree_r,
            "subadditive_bound": self.subadditive_bound,
            "subadditive_ratio": self.subadditive_ratio,
            "normalised_ratio": self.normalised_ratio,
            "envelope_holds": self.envelope_holds,
            "moment_holds": self.moment_holds,
            "holds": self.holds,
        }


def pareto_cdf(tail_exponent: float, truncation: int) -> np.ndarray:
    weights = np.arange(1, truncation + 1, dtype=np.float64) ** -(1.0 + tail_exponent)
    cdf = np.cumsum(weights)
    return cdf / cdf[-1]


def sample_pareto_degrees(
    rng: np.random.Generator,
    cdf: np.ndarray,
    size,
) -> np.ndarray:
    """Inverse-CDF draws, values in 1..len(cdf)."""
    idx = np.searchsorted(cdf, rng.random(size=size), side="right")
    return np.minimum(idx, len(cdf) - 1) + 1


def two_path_envelope(d_root: int, degrees: np.ndarray, p: float) -> np.ndarray:
    """d^{1-1/p} (sum_u D_u^p)^{1/p} along the last axis."""
    degrees = np.asarray(degrees, dtype=np.float64)
    if p == 1.0:
        return degrees.sum(axis=-1)
    return float(d_root) ** (1.0 - 1.0 / p) * np.power(np.power(degrees, p).sum(axis=-1), 1.0 / p)


def count_envelope_violations(d_root: int, degrees: np.ndarray, p: float) -> int:
    """
    Samples (rows) whose walk count exceeds the envelope. Inside the guard band
    an integer p is settled exactly: hom^p <= d^{p-1} sum_u D_u^p.
    """
    degrees = np.atleast_2d(degrees)
    hom = degrees.sum(axis=-1).astype(np.float64)
    env = two_path_envelope(d_root, degrees, p)
    flagged = hom > env * (1 + GUARD_BAND)
    if float(p).is_integer():
        e = int(p)
        near = np.abs(hom - env) <= GUARD_BAND * np.maximum(hom, env)
        for i in np.flatnonzero(near):
            row = [int(x) for x in degrees[i]]
            flagged[i] = sum(row) ** e > d_root ** (e - 1) * sum(x ** e for x in row)
    return int(np.count_nonzero(flagged))


def heavy_tail_experiment(
    d_root: int,
    tail_exponent: Rational,
    r: Rational,
    p: Rational,
    samples: int,
    seed: int,
    truncation: int = DEFAULT_TRUNCATION,
    slack: float = DEFAULT_SLACK,
) -> HeavyTailReport:
    """
    Raises:
        ExperimentError: parameters outside 0 < r < tau < 1, p >= 1, d >= 1
    """
    tau, rr, pp = float(Fraction(tail_exponent)), float(Fraction(r)), float(Fraction(p))
    if not 0 < tau < 1:
        raise ExperimentError(f"Tail exponent must lie in (0, 1), got {tau}")
    if not 0 < rr < 1:
        raise ExperimentError(f"Moment order r must lie in (0, 1), got {rr}")
    if rr >= tau:
        raise ExperimentError(f"Need r < tail exponent for a finite moment, got r={rr}, tau={tau}")
    if pp < 1:
        raise ExperimentError(f"Envelope exponent must be >= 1, got {pp}")
    if d_root < 1 or samples < 1 or truncation < 1:
        raise ExperimentError("d_root, samples and truncation must be positive")

    rng = make_rng(seed)
    cdf = pareto_cdf(tau, truncation)
    degrees = sample_pareto_degrees(rng, cdf, (samples, d_root))

    violations = count_envelope_violations(d_root, degrees, pp)
    hom = degrees.sum(axis=1).astype(np.float64)

    mean_hom_r = math.fsum(np.power(hom, rr)) / samples
    mean_degree_r = math.fsum(np.power(degrees.astype(np.float64), rr).ravel()) / degrees.size
    bound = d_root * mean_degree_r
    normaliser = d_root ** rr * mean_degree_r

    logger.info(
        f"heavy-tail d={d_root} tau={tau} r={rr} p={pp}: "
        f"E[hom^r]={mean_hom_r:.4f}, d*E[D^r]={bound:.4f}, envelope violations={violations}"
    )
    return HeavyTailReport(
        d_root=d_root,
        tail_exponent=tau,
        r=rr,
        p=pp,
        samples=samples,
        seed=seed,
        truncation=truncation,
        envelope_violations=violations,
        mean_hom_r=mean_hom_r,
        mean_degree_r=mean_degree_r,
        subadditive_bound=bound,
        subadditive_ratio=mean_hom_r / bound,
        normalised_ratio=mean_hom_r / normaliser,
        slack=slack,
    )
