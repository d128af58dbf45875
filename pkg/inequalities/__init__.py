"""
Inequalities module - Both sides of every tree-count bound on concrete instances

Contains:
- report: BoundReport and the counterexample alarm
- sidorenko: tree vs pure-star bound, star Hölder, leaf reallocation
- tail: tail-truncated bounds and pointwise Hölder envelopes
- matrix: weighted-tree and path bounds over rational matrices
- moments: per-vertex moment forms
- checker: seeded random suites
"""

from .report import BoundReport, CounterexampleAlarm, GUARD_BAND
from .sidorenko import (
    ReallocationCandidates,
    ReallocationTrace,
    check_geometric_mean,
    check_main_theorem,
    check_star_holder,
    check_star_max_form,
    leaf_reallocation_candidates,
    reallocation_trace,
    skeleton_leaves,
)
from .tail import (
    check_pointwise_envelope,
    check_tail_theorem,
    check_tail_unweighted,
    check_uniform_envelope,
    tail_ratio,
)
from .matrix import check_mv_path, check_weighted_tree, probe_weighted_sqrt
from .moments import check_embedding_moment, check_moment_domination, check_truncation_domination
from .checker import InequalityChecker, SuiteResult, SUITES

__all__ = [
    'BoundReport',
    'CounterexampleAlarm',
    'GUARD_BAND',
    'ReallocationCandidates',
    'ReallocationTrace',
    'check_geometric_mean',
    'check_main_theorem',
    'check_star_holder',
    'check_star_max_form',
    'leaf_reallocation_candidates',
    'reallocation_trace',
    'skeleton_leaves',
    'check_pointwise_envelope',
    'check_tail_theorem',
    'check_tail_unweighted',
    'check_uniform_envelope',
    'tail_ratio',
    'check_mv_path',
    'check_weighted_tree',
    'probe_weighted_sqrt',
    'check_embedding_moment',
    'check_moment_domination',
    'check_truncation_domination',
    'InequalityChecker',
    'SuiteResult',
    'SUITES',
]
