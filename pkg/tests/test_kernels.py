from fractions import Fraction

import pytest

from digraph.enumerate import enumerate_hosts
from digraph.formats import ParseError
from digraph.graph import Digraph, SizeLimitError
from digraph.trees import make_oriented_path, make_star
from kernels.montecarlo import mc_density_check
from kernels.sampler import sample_gnh
from kernels.step import (
    KernelError,
    StepKernel,
    config_product,
    duplicate_blocks,
    format_kernel,
    hom_density,
    load_kernel,
    parse_kernel,
    step_kernel_of_host,
)

P2 = make_oriented_path("++").to_digraph()


@pytest.fixture
def triangle_kernel(triangle):
    return step_kernel_of_host(triangle)


def _patterns(max_n):
    return [d for n in range(1, max_n + 1) for d in enumerate_hosts(n, canonical=True)]


def test_host_kernel_identity(small_hosts):
    for pattern in _patterns(3) + [Digraph.empty(0)]:
        for host in small_hosts:
            assert config_product(pattern, step_kernel_of_host(host)) == hom_density(pattern, host)


@pytest.mark.slow
def test_host_kernel_identity_four_vertex_patterns(small_hosts):
    for pattern in enumerate_hosts(4, canonical=True):
        for host in small_hosts:
            assert config_product(pattern, step_kernel_of_host(host)) == hom_density(pattern, host)


def test_triangle_kernel_path_density(triangle_kernel):
    assert config_product(P2, triangle_kernel) == Fraction(1, 9)


def test_constant_kernel():
    kernel = StepKernel.constant(2, Fraction(1, 2))
    assert config_product(make_star(0, 1).to_digraph(), kernel) == Fraction(1, 2)
    assert config_product(P2, kernel) == Fraction(1, 4)
    assert config_product(Digraph.empty(3), kernel) == 1


def test_block_duplication_invariance(triangle_kernel):
    kernel = StepKernel.of([[0, "1/3"], [1, "1/2"]], ["1/4", "3/4"])
    for base in (kernel, triangle_kernel):
        for factor in (1, 2, 3):
            dup = duplicate_blocks(base, factor)
            assert dup.n == base.n * factor
            for pattern in _patterns(3):
                assert config_product(pattern, dup) == config_product(pattern, base)
    with pytest.raises(KernelError):
        duplicate_blocks(kernel, 0)


def test_zero_mass_blocks_are_skipped():
    kernel = StepKernel.of([[1, 1], [1, 0]], [1, 0])
    assert config_product(P2, kernel) == 1


@pytest.mark.parametrize(
    "values,masses",
    [
        ([[2]], [1]),
        ([[0, 1], [1, 0]], ["1/2", "1/3"]),
        ([[0, 1], [1, 0]], [-1, 2]),
        ([[0, 1]], [1]),
        ([], []),
    ],
)
def test_kernel_validation(values, masses):
    with pytest.raises(KernelError):
        StepKernel.of(values, masses)


def test_density_needs_a_host():
    with pytest.raises(KernelError):
        hom_density(P2, Digraph.empty(0))
    with pytest.raises(KernelError):
        step_kernel_of_host(Digraph.empty(0))


def test_parse_kernel():
    kernel = parse_kernel("# two blocks\n2\n1/4 3/4\n0 1/3\n1 0.5\n")
    assert kernel.masses == (Fraction(1, 4), Fraction(3, 4))
    assert kernel.values[1] == (Fraction(1), Fraction(1, 2))
    assert parse_kernel(format_kernel(kernel)) == kernel


@pytest.mark.parametrize(
    "text",
    ["", "0\n", "2\n", "2\n1/2 1/2\n0 1\n", "2\n1/2 1/3\n0 1\n1 0\n", "1\n1\n2\n", "x\n1\n0\n"],
)
def test_malformed_kernels(text):
    with pytest.raises(ParseError):
        parse_kernel(text)


def test_load_kernel(tmp_path, triangle_kernel):
    path = tmp_path / "tri.k"
    path.write_text(format_kernel(triangle_kernel), encoding="utf-8")
    assert load_kernel(path) == triangle_kernel
    with pytest.raises(ParseError):
        load_kernel(tmp_path / "missing.k")


def test_sampler_is_seeded(triangle_kernel):
    assert sample_gnh(20, triangle_kernel, 7) == sample_gnh(20, triangle_kernel, 7)
    graph = sample_gnh(20, triangle_kernel, 7)
    assert graph.n == 20
    assert all(not graph.has_arc(v, v) for v in range(20))


def test_sampler_extremes():
    assert sample_gnh(6, StepKernel.constant(1, 1), 0) == Digraph.complete(6)
    assert sample_gnh(6, StepKernel.constant(1, 0), 0) == Digraph.empty(6)


def test_sampler_limits(triangle_kernel):
    with pytest.raises(KernelError):
        sample_gnh(0, triangle_kernel, 0)
    with pytest.raises(SizeLimitError):
        sample_gnh(65, triangle_kernel, 0)


def test_monte_carlo_triangle_path(triangle_kernel):
    check = mc_density_check(P2, triangle_kernel, 30, 500, seed=0)
    assert check.exact == Fraction(1, 9)
    assert check.holds
    assert abs(check.mean_inj - 1 / 9) <= 3 * check.std_err_inj + 0.01
    doc = check.to_dict()
    assert doc["U"] == "1/9"
    assert doc["trials"] in (500, 2000)


def test_monte_carlo_is_seeded(triangle_kernel):
    first = mc_density_check(P2, triangle_kernel, 10, 20, seed=4)
    second = mc_density_check(P2, triangle_kernel, 10, 20, seed=4, workers=2)
    assert first.mean_t == second.mean_t
    assert first.mean_inj == second.mean_inj


def test_monte_carlo_bias_bound(triangle_kernel):
    check = mc_density_check(P2, triangle_kernel, 10, 5, seed=1, rerun_factor=1)
    assert check.bias_bound == pytest.approx(1 - 720 / 1000)
    assert check.tolerance >= check.tolerance_inj


@pytest.mark.parametrize(
    "pattern,n,trials",
    [
        (Digraph.empty(0), 10, 10),
        (Digraph.empty(5), 10, 10),
        (P2, 2, 10),
        (P2, 41, 10),
        (P2, 10, 0),
    ],
)
def test_monte_carlo_limits(pattern, n, trials, triangle_kernel):
    with pytest.raises(KernelError):
        mc_density_check(pattern, triangle_kernel, n, trials)
