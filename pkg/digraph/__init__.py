"""
Digraph module - 有向图与有向树模式

包含：
- graph: 位行表示的有向图、度数
- trees: 有根有向树、星图、定向路径
- canonical: 规范型与树编码
- enumerate: 宿主图与有向树枚举
- formats: 文本格式解析与输出
"""

from .graph import Digraph, DegreeProfile, DigraphError, SizeLimitError
from .trees import (
    Orientation,
    RootedDirectedTree,
    TreeError,
    make_oriented_path,
    make_star,
)
from .canonical import canonical_form, canonical_tree, tree_code, trees_isomorphic
from .enumerate import (
    enumerate_directed_trees,
    enumerate_hosts,
    host_count,
    host_from_index,
    host_index,
)
from .formats import ParseError, load_digraph, parse_digraph, parse_tree, tree_name

__all__ = [
    'Digraph',
    'DegreeProfile',
    'DigraphError',
    'SizeLimitError',
    'Orientation',
    'RootedDirectedTree',
    'TreeError',
    'make_oriented_path',
    'make_star',
    'canonical_form',
    'canonical_tree',
    'tree_code',
    'trees_isomorphic',
    'enumerate_directed_trees',
    'enumerate_hosts',
    'host_count',
    'host_from_index',
    'host_index',
    'ParseError',
    'load_digraph',
    'parse_digraph',
    'parse_tree',
    'tree_name',
]
