"""
Homcount module - Exact homomorphism counting

Contains:
- general: backtracking counts for arbitrary patterns, injective and rooted variants
- tree: message passing for directed trees, tail-weighted counts, pair tables
- weighted: tree counts over nonnegative rational matrices
"""

from .general import (
    count_maps,
    emb_injective,
    emb_rooted,
    embtrunc_rooted,
    hom_components,
    hom_general,
)
from .tree import (
    PairCountTable,
    TailCount,
    WeightVector,
    hom_rooted,
    hom_tail,
    hom_tree,
    pair_counts,
    rooted_counts,
    star_hom,
)
from .weighted import NonnegMatrix, hom_weighted, load_nonneg_matrix, parse_nonneg_matrix

__all__ = [
    'count_maps',
    'emb_injective',
    'emb_rooted',
    'embtrunc_rooted',
    'hom_components',
    'hom_general',
    'PairCountTable',
    'TailCount',
    'WeightVector',
    'hom_rooted',
    'hom_tail',
    'hom_tree',
    'pair_counts',
    'rooted_counts',
    'star_hom',
    'NonnegMatrix',
    'hom_weighted',
    'load_nonneg_matrix',
    'parse_nonneg_matrix',
]
