"""
文本格式

宿主图两种输入格式（自动识别）：
- 邻接矩阵：首行 n，随后 n 行、每行 n 个 0/1
- 弧列表：首行 "n m"，随后 m 行 "u v"
以 '#' 开头的行为注释。

树字面量：
- "S a b"        星图 S_{a,b}
- "P +-+"        定向路径
- "0>1,2>1,1>3"  弧列表（顶点 0 为根）
"""

import logging
import re
from pathlib import Path
from typing import List, Union

from .graph import Digraph, DigraphError
from .trees import RootedDirectedTree, TreeError, make_oriented_path, make_star

logger = logging.getLogger(__name__)


class ParseError(DigraphError):
    """Exception raised for malformed input text."""
    pass


def _content_lines(text: str) -> List[List[str]]:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line.replace(",", " ").split())
    return lines


def _ints(tokens: List[str], lineno: int) -> List[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"Line {lineno}: expected integers, got {' '.join(tokens)!r}")


def parse_digraph(text: str) -> Digraph:
    """
    解析宿主图文本，按首行 token 数识别格式

    Raises:
        ParseError: 格式错误
    """
    lines = _content_lines(text)
    if not lines:
        raise ParseError("Empty digraph description")

    header = _ints(lines[0], 1)
    body = [_ints(tokens, i + 2) for i, tokens in enumerate(lines[1:])]

    if len(header) == 1:
        n = header[0]
        if n < 0 or len(body) != n:
            raise ParseError(f"Matrix header says n={n} but {len(body)} rows follow")
        for i, row in enumerate(body):
            if len(row) != n:
                raise ParseError(f"Matrix row {i} has {len(row)} entries, expected {n}")
        try:
            return Digraph.from_matrix(body)
        except DigraphError as e:
            raise ParseError(str(e))

    if len(header) == 2:
        n, m = header
        if len(body) != m:
            raise ParseError(f"Edge list header says m={m} but {len(body)} arcs follow")
        arcs = []
        for i, pair in enumerate(body):
            if len(pair) != 2:
                raise ParseError(f"Arc line {i} must hold two vertices, got {pair}")
            arcs.append((pair[0], pair[1]))
        if len(set(arcs)) != len(arcs):
            raise ParseError("Edge list contains a repeated arc")
        try:
            return Digraph.from_arcs(n, arcs)
        except DigraphError as e:
            raise ParseError(str(e))

    raise ParseError(f"Header line must hold 1 (matrix) or 2 (edge list) integers, got {len(header)}")


def load_digraph(path: Union[str, Path]) -> Digraph:
    path = Path(path)
    if not path.exists():
        raise ParseError(f"Digraph file not found: {path}")
    try:
        text = path.read_text(encoding="utf-8")
    except IOError as e:
        raise ParseError(f"Failed to read digraph file {path}: {e}")
    logger.debug(f"Loaded digraph from {path}")
    return parse_digraph(text)


def format_matrix(graph: Digraph) -> str:
    lines = [str(graph.n)]
    for row in graph.matrix():
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def format_edge_list(graph: Digraph) -> str:
    arcs = graph.arcs()
    lines = [f"{graph.n} {len(arcs)}"] + [f"{u} {v}" for u, v in arcs]
    return "\n".join(lines) + "\n"


def matrix_literal(graph: Digraph) -> str:
    """紧凑矩阵字面量，例如 [[0,0,0],[0,0,0],[1,1,0]]"""
    return "[" + ",".join("[" + ",".join(str(x) for x in row) + "]" for row in graph.matrix()) + "]"


def digraph_from_bits(n: int, bits: str) -> Digraph:
    """按行优先的 n*n 位串构造有向图（含对角位，须为 0）"""
    bits = bits.strip()
    if len(bits) != n * n or set(bits) - {"0", "1"}:
        raise ParseError(f"Expected {n * n} binary digits, got {bits!r}")
    try:
        return Digraph.from_matrix([[int(bits[i * n + j]) for j in range(n)] for i in range(n)])
    except DigraphError as e:
        raise ParseError(str(e))


_STAR = re.compile(r"^S\s*_?\{?\s*(\d+)\s*[ ,]\s*(\d+)\s*\}?$")
_PATH = re.compile(r"^P\s*_?\{?\s*([+\-−]+)\s*\}?$")
_ARC = re.compile(r"^(\d+)\s*>\s*(\d+)$")


def parse_tree(literal: str) -> RootedDirectedTree:
    """
    解析树字面量

    Raises:
        ParseError: 无法识别或不是树
    """
    text = literal.strip()
    try:
        m = _STAR.match(text)
        if m:
            return make_star(int(m.group(1)), int(m.group(2)))
        m = _PATH.match(text)
        if m:
            return make_oriented_path(m.group(1))

        arcs = []
        for part in text.split(","):
            am = _ARC.match(part.strip())
            if not am:
                raise ParseError(f"Unrecognised tree literal: {literal!r}")
            arcs.append((int(am.group(1)), int(am.group(2))))
        k = max(max(u, v) for u, v in arcs) + 1
        return RootedDirectedTree.from_arcs(k, arcs)
    except TreeError as e:
        raise ParseError(f"Invalid tree {literal!r}: {e}")


def tree_literal(tree: RootedDirectedTree) -> str:
    """弧列表字面量，parse_tree 可读回（同构意义下）"""
    return ",".join(f"{u}>{v}" for u, v in tree.arcs())


def tree_name(tree: RootedDirectedTree) -> str:
    """展示名：星图写作 S_{a,b}，路径写作 P_{±…}，其余用弧列表"""
    shape = tree.star_shape()
    if shape is not None and tree.k > 3:
        return f"S_{{{shape[0]},{shape[1]}}}"

    degrees = [tree.degree(x) for x in range(tree.k)]
    if tree.k >= 2 and max(degrees) <= 2:
        ends = [x for x in range(tree.k) if degrees[x] == 1]
        signs = []
        prev, cur = None, ends[0]
        while True:
            nxt = [(y, o) for y, o in tree.neighbors[cur] if y != prev]
            if not nxt:
                break
            y, o = nxt[0]
            signs.append("+" if o.value == "out" else "-")
            prev, cur = cur, y
        # 路径与其反向读法同构，取字典序较小者
        forward = "".join(signs)
        backward = "".join("+" if s == "-" else "-" for s in reversed(signs))
        return f"P_{{{min(forward, backward)}}}"

    return tree_literal(tree)
