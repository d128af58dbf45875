import random
from fractions import Fraction

import numpy as np
import pytest

from digraph.graph import Digraph, DigraphError, SizeLimitError
from models.degree import degree_moment_summary
from models.generators import (
    gen_erdos_renyi_digraph,
    instance_rng,
    random_digraph,
    random_tree,
    sample_seed,
    star_host,
)
from models.heavy_tail import (
    ExperimentError,
    count_envelope_violations,
    heavy_tail_experiment,
    two_path_envelope,
)


def test_erdos_renyi_is_seeded():
    assert gen_erdos_renyi_digraph(12, 0.3, 5) == gen_erdos_renyi_digraph(12, 0.3, 5)
    assert gen_erdos_renyi_digraph(6, 0, 1) == Digraph.empty(6)
    assert gen_erdos_renyi_digraph(6, 1, 1) == Digraph.complete(6)


def test_erdos_renyi_arguments():
    with pytest.raises(ValueError):
        gen_erdos_renyi_digraph(4, 1.5, 0)
    with pytest.raises(SizeLimitError):
        gen_erdos_renyi_digraph(65, 0.5, 0)


def test_random_digraph_size_range():
    rng = random.Random(3)
    for _ in range(20):
        assert 2 <= random_digraph(4, rng, n_min=2).n <= 4


def test_star_host():
    host = star_host(2, 1)
    assert host.n == 4
    assert host.arcs() == [(0, 3), (1, 0), (2, 0)]
    assert host.profile.deg_in[0] == 2 and host.profile.deg_out[0] == 1
    assert star_host(0, 0) == Digraph.empty(1)
    with pytest.raises(ValueError):
        star_host(-1, 2)


def test_random_tree():
    rng = random.Random(11)
    for k in range(1, 8):
        tree = random_tree(k, rng)
        assert tree.k == k
        assert len(tree.arcs()) == k - 1
        assert tree.to_digraph().is_weakly_connected()
    with pytest.raises(ValueError):
        random_tree(0, rng)


def test_instance_seeds():
    assert instance_rng(1, 2).random() == instance_rng(1, 2).random()
    assert instance_rng(1, 2).random() != instance_rng(1, 3).random()
    assert instance_rng(1, 2, "a").random() != instance_rng(1, 2, "b").random()
    assert sample_seed(6, 3) == 5


def test_degree_moments(triangle):
    summary = degree_moment_summary(triangle, 2)
    assert (summary.mean_in_pow, summary.mean_out_pow, summary.mean_total_pow) == (1, 1, 2)
    assert summary.sandwich_holds()
    assert summary.to_dict()["mean_total_pow"] == "2"


def test_degree_moments_on_star():
    summary = degree_moment_summary(star_host(2, 1), 3)
    assert summary.mean_in_pow == Fraction(4, 4)
    assert summary.mean_out_pow == Fraction(1 + 1 + 1, 4)
    assert summary.mean_total_pow == Fraction(9 + 1 + 1 + 1, 4)
    assert summary.sandwich_holds()


def test_degree_moments_sandwich_everywhere(small_hosts):
    for host in small_hosts:
        for h in range(2, 5):
            assert degree_moment_summary(host, h).sandwich_holds()


def test_degree_moment_arguments(triangle):
    with pytest.raises(ValueError):
        degree_moment_summary(triangle, 1)
    with pytest.raises(DigraphError):
        degree_moment_summary(Digraph.empty(0), 2)


def test_envelope_equality_is_not_a_violation():
    degrees = np.array([[3, 3], [1, 4]])
    assert count_envelope_violations(2, degrees, 2) == 0
    assert count_envelope_violations(2, degrees, 1) == 0
    assert two_path_envelope(2, degrees, 1).tolist() == [6.0, 5.0]
    assert two_path_envelope(1, np.array([[5]]), 3)[0] == pytest.approx(5.0)


def test_heavy_tail_experiment():
    report = heavy_tail_experiment(3, "1/2", "1/4", 2, 2000, seed=7, truncation=1000)
    assert report.envelope_violations == 0
    assert report.moment_holds
    assert report.holds
    assert report.subadditive_ratio <= 1 + 1e-9
    doc = report.to_dict()
    assert doc["params"]["samples"] == 2000
    assert doc["holds"] is True


def test_heavy_tail_is_seeded():
    first = heavy_tail_experiment(2, 0.6, 0.3, 1.5, 500, seed=1, truncation=500)
    second = heavy_tail_experiment(2, 0.6, 0.3, 1.5, 500, seed=1, truncation=500)
    assert first.to_dict() == second.to_dict()


@pytest.mark.slow
def test_heavy_tail_default_truncation():
    report = heavy_tail_experiment(4, "1/2", "1/4", 3, 20000, seed=0)
    assert report.holds


@pytest.mark.parametrize(
    "d_root,tau,r,p,samples",
    [
        (2, 1.5, 0.2, 2, 10),
        (2, 0.5, 0.6, 2, 10),
        (2, 0.5, 0.5, 2, 10),
        (2, 0.5, 0.2, 0.5, 10),
        (0, 0.5, 0.2, 2, 10),
        (2, 0.5, 0.2, 2, 0),
    ],
)
def test_heavy_tail_arguments(d_root, tau, r, p, samples):
    with pytest.raises(ExperimentError):
        heavy_tail_experiment(d_root, tau, r, p, samples, seed=0, truncation=100)
