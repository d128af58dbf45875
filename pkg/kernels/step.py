"""
Step Kernels

块常值核：N 个块，块质量 masses（精确有理数，和为 1），块间取值 values ∈ [0,1]。
配置积 U_D(h) 在阶梯核上是有限加权和，全程用 Fraction 精确计算。
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, List, Sequence, Tuple, Union

from digraph.formats import ParseError
from digraph.graph import Digraph
from homcount.general import hom_components
from homcount.weighted import parse_rational_rows

logger = logging.getLogger(__name__)


class KernelError(ValueError):
    """阶梯核参数非法"""
    pass


@dataclass(frozen=True)
class StepKernel:
    """
    阶梯核

    Attributes:
        values: N×N 取值矩阵，元素在 [0,1]
        masses: N 个块质量，非负且和恰为 1
    """
    values: Tuple[Tuple[Fraction, ...], ...]
    masses: Tuple[Fraction, ...]

    def __post_init__(self):
        n = len(self.masses)
        if n == 0:
            raise KernelError("A step kernel needs at least one block")
        if len(self.values) != n:
            raise KernelError(f"Kernel has {len(self.values)} value rows for {n} blocks")
        for i, row in enumerate(self.values):
            if len(row) != n:
                raise KernelError(f"Kernel value row {i} has {len(row)} entries, expected {n}")
            for j, x in enumerate(row):
                if not 0 <= x <= 1:
                    raise KernelError(f"Kernel value ({i},{j}) = {x} lies outside [0, 1]")
        for i, m in enumerate(self.masses):
            if m < 0:
                raise KernelError(f"Block mass {i} is negative: {m}")
        total = sum(self.masses, Fraction(0))
        if total != 1:
            raise KernelError(f"Block masses sum to {total}, expected exactly 1")

    @classmethod
    def of(cls, values: Sequence[Sequence[Any]], masses: Sequence[Any] = None) -> "StepKernel":
        """由任意可转 Fraction 的数值构造；masses 缺省为均匀质量"""
        n = len(values)
        if masses is None:
            masses = [Fraction(1, n)] * n if n else []
        return cls(
            tuple(tuple(Fraction(x) for x in row) for row in values),
            tuple(Fraction(m) for m in masses),
        )

    @classmethod
    def constant(cls, n: int, c: Any) -> "StepKernel":
        return cls.of([[c] * n for _ in range(n)])

    @property
    def n(self) -> int:
        return len(self.masses)

    def to_dict(self):
        return {
            "n": self.n,
            "masses": [str(m) for m in self.masses],
            "values": [[str(x) for x in row] for row in self.values],
        }


def config_product(pattern: Digraph, kernel: StepKernel) -> Fraction:
    """
    配置积 U_D(h) = Σ_φ Π_{u→v} values[φu][φv] · Π_w masses[φw]

    按顶点序逐个赋块，一条弧在两端都已赋值时乘入；部分积为 0 即剪枝。
    """
    if pattern.n == 0:
        return Fraction(1)

    # 每个顶点与更早顶点之间的弧：(更早顶点, True 表示 更早→当前)
    earlier: List[List[Tuple[int, bool]]] = []
    for v in range(pattern.n):
        cons = [(u, True) for u in pattern.in_lists[v] if u < v]
        cons += [(w, False) for w in pattern.out_lists[v] if w < v]
        earlier.append(cons)

    blocks = [b for b in range(kernel.n) if kernel.masses[b]]
    image = [0] * pattern.n
    values, masses = kernel.values, kernel.masses

    def extend(v: int, weight: Fraction) -> Fraction:
        if v == pattern.n:
            return weight
        total = Fraction(0)
        for b in blocks:
            w = weight * masses[b]
            for u, forward in earlier[v]:
                w *= values[image[u]][b] if forward else values[b][image[u]]
                if not w:
                    break
            if w:
                image[v] = b
                total += extend(v + 1, w)
        return total

    return extend(0, Fraction(1))


def step_kernel_of_host(host: Digraph) -> StepKernel:
    """h_H：每个顶点一块，均匀质量 1/N，取值为邻接指示"""
    if host.n < 1:
        raise KernelError("The host of a step kernel needs at least one vertex")
    return StepKernel.of(host.matrix())


def duplicate_blocks(kernel: StepKernel, factor: int) -> StepKernel:
    """
    把每个块拆成 factor 个等质量子块并复制取值（拉回不变）

    子块 i*factor + s 继承块 i 的取值，质量为 masses[i] / factor。
    """
    if factor < 1:
        raise KernelError(f"Duplication factor must be at least 1, got {factor}")
    n = kernel.n
    values = tuple(
        tuple(kernel.values[i // factor][j // factor] for j in range(n * factor))
        for i in range(n * factor)
    )
    masses = tuple(kernel.masses[i // factor] / factor for i in range(n * factor))
    return StepKernel(values, masses)


def hom_density(pattern: Digraph, host: Digraph) -> Fraction:
    """t(D,H) = hom(D,H) / |V(H)|^|V(D)|，D 可不连通"""
    if host.n == 0:
        raise KernelError("Homomorphism density needs a nonempty host")
    return Fraction(hom_components(pattern, host), host.n ** pattern.n)


def parse_kernel(text: str) -> StepKernel:
    """
    解析核文件：第一行 N，第二行 N 个质量 p/q，之后 N 行取值

    Raises:
        ParseError: 格式错误或参数非法
    """
    lines = [
        raw.split("#", 1)[0].split()
        for raw in text.splitlines()
        if raw.split("#", 1)[0].strip()
    ]
    if not lines or len(lines[0]) != 1:
        raise ParseError("Kernel file must start with a line holding N")
    try:
        n = int(lines[0][0])
    except ValueError:
        raise ParseError(f"Kernel block count must be an integer, got {lines[0][0]!r}")
    if n < 1:
        raise ParseError(f"Kernel block count must be positive, got {n}")
    if len(lines) < 2:
        raise ParseError("Kernel file is missing the mass line")

    masses = parse_rational_rows(lines[1:2], 1, n, "masses")[0]
    values = parse_rational_rows(lines[2:], n, n, "values")
    try:
        return StepKernel.of(values, masses)
    except KernelError as e:
        raise ParseError(str(e))


def load_kernel(path: Union[str, Path]) -> StepKernel:
    path = Path(path)
    if not path.exists():
        raise ParseError(f"Kernel file not found: {path}")
    logger.debug(f"Loading kernel from {path}")
    return parse_kernel(path.read_text(encoding="utf-8"))


def format_kernel(kernel: StepKernel) -> str:
    lines = [str(kernel.n), " ".join(str(m) for m in kernel.masses)]
    for row in kernel.values:
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"
