"""
Models module - Random digraph sources and probabilistic experiments

Contains:
- generators: seeded Erdős–Rényi digraphs, random trees, star hosts, rational matrices
- degree: degree-power means and the tree-family exploration bound
- heavy_tail: fractional moments of 2-walk counts under heavy-tailed degrees
"""

from .generators import (
    gen_erdos_renyi_digraph,
    make_rng,
    random_digraph,
    random_nonneg_matrix,
    random_tree,
    random_weights,
    star_host,
)
from .degree import DegreeMomentSummary, degree_moment_summary, exploration_bound_report
from .heavy_tail import ExperimentError, HeavyTailReport, heavy_tail_experiment

__all__ = [
    'gen_erdos_renyi_digraph',
    'make_rng',
    'random_digraph',
    'random_nonneg_matrix',
    'random_tree',
    'random_weights',
    'star_host',
    'DegreeMomentSummary',
    'degree_moment_summary',
    'exploration_bound_report',
    'ExperimentError',
    'HeavyTailReport',
    'heavy_tail_experiment',
]
