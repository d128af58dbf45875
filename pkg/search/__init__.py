"""
Search module - Exhaustive comparison of tree patterns over small hosts

Contains:
- verdict: verdict and witness types
- sweep: host sweeps for pattern pairs and families, plus the max order
- appendix: the published 3-arc witness table and the delta identity
- stars: star host closed forms and star witnesses
"""

from .verdict import HostWitness, OrderVerdict, VerdictKind, WitnessRecord
from .sweep import PairVerdict, compare_maxorder, compare_over_hosts, family_trees, sweep_family, sweep_pairs
from .appendix import AppendixMismatch, AppendixResult, DeltaIdentity, delta_identity, reproduce_appendix_table
from .stars import construct_star_witness, star_incomparability_suite

__all__ = [
    'HostWitness',
    'OrderVerdict',
    'VerdictKind',
    'WitnessRecord',
    'PairVerdict',
    'compare_maxorder',
    'compare_over_hosts',
    'family_trees',
    'sweep_family',
    'sweep_pairs',
    'AppendixMismatch',
    'AppendixResult',
    'DeltaIdentity',
    'delta_identity',
    'reproduce_appendix_table',
    'construct_star_witness',
    'star_incomparability_suite',
]
