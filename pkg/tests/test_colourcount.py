import math
from fractions import Fraction

import pytest

from chronopath.colourcount import (
    count_multicoloured,
    estimate_short,
    estimate_total,
    trial_count,
)
from chronopath.errors import InvalidParameterError
from chronopath.forest import count_forest
from chronopath.generate import diamond_chain, random_forest_graph
from chronopath.oracle import count_paths_bf, iter_paths
from chronopath.rng import child_rng

from conftest import I1, I5, make_graph, random_instance


def bruteforce_colourful(g, s, z, colours, nc):
    total = 0
    for p in iter_paths(g, s, z):
        internals = p.vertices()[1:-1]
        if sorted(colours[v] for v in internals) == list(range(1, nc + 1)):
            total += 1
    return total


def bruteforce_k_paths(g, s, z, k):
    return sum(1 for p in iter_paths(g, s, z) if p.length == k)


def test_examples():
    assert count_multicoloured(I1, 0, 2, {1: 1}, 1) == 1
    d = diamond_chain(1)
    assert count_multicoloured(d, 0, 3, {1: 1, 2: 1}, 1) == 2
    # a colour class with no neighbour of s kills every path
    g = make_graph(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1)])
    assert count_multicoloured(g, 0, 2, {1: 1, 3: 2}, 2) == 0


def test_against_bruteforce(rng):
    for _ in range(150):
        g = random_instance(rng, n_hi=9, m_hi=14)
        s, z = rng.sample(range(g.n), 2)
        others = [v for v in range(g.n) if v not in (s, z)]
        nc = rng.randint(1, max(len(others), 1))
        colours = {v: rng.randint(1, nc) for v in others}
        assert count_multicoloured(g, s, z, colours, nc) == bruteforce_colourful(
            g, s, z, colours, nc
        )


def test_length_decomposition_matches_total(rng):
    # Exact per-length counts (brute force) add up to the total count.
    for _ in range(40):
        g = random_instance(rng, n_hi=7)
        s, z = rng.sample(range(g.n), 2)
        total = sum(bruteforce_k_paths(g, s, z, k) for k in range(1, g.n))
        assert total == count_paths_bf(g, s, z)


def test_estimate_short_exact_cases():
    assert estimate_short(I5, 0, 2, 1, 0.5, 0.1, seed=1) == 1
    assert estimate_short(I1, 0, 2, 5, 0.5, 0.1, seed=1) == 0


def test_estimate_short_param_validation():
    with pytest.raises(InvalidParameterError):
        estimate_short(I1, 0, 2, 2, -1.0, 0.1, seed=0)
    with pytest.raises(InvalidParameterError):
        estimate_short(I1, 0, 2, 2, 0.5, 1.5, seed=0)
    with pytest.raises(InvalidParameterError):
        estimate_short(I1, 0, 2, 0, 0.5, 0.1, seed=0)


def test_trial_count_grows():
    assert trial_count(2, 0.25, 0.1, 3.0) < trial_count(4, 0.25, 0.1, 3.0)


def test_unbiasedness_three_standard_errors():
    # Mean of rescaled single-colouring counts converges to the true count.
    g = diamond_chain(2)
    s, z = 0, g.n - 1
    k = 4
    truth = bruteforce_k_paths(g, s, z, k)
    assert truth == 4
    ell = k - 1
    scale = Fraction(ell**ell, math.factorial(ell))
    internal = [v for v in range(g.n) if v not in (s, z)]
    samples = []
    for trial in range(4000):
        rng = child_rng(123456, "unbias", trial)
        colouring = {v: rng.randrange(1, ell + 1) for v in internal}
        samples.append(float(scale * count_multicoloured(g, s, z, colouring, ell)))
    mean = sum(samples) / len(samples)
    var = sum((x - mean) ** 2 for x in samples) / (len(samples) - 1)
    se = (var / len(samples)) ** 0.5
    assert abs(mean - truth) <= 3 * se + 1e-9


def test_estimate_total_near_truth():
    est = estimate_total(I5, 0, 2, 0.25, 0.1, seed=9)
    assert abs(float(est) - 2) <= 0.25 * 2
    none = make_graph(3, [(0, 1, 2), (1, 2, 1)])
    assert estimate_total(none, 0, 2, 0.25, 0.1, seed=9) == 0


def test_estimate_total_matches_forest_dp():
    g = random_forest_graph(n=6, m=9, t_max=4, seed=77)
    truth = count_forest(g, 0, 5)
    est = estimate_total(g, 0, 5, 0.25, 0.05, seed=4)
    assert abs(float(est) - truth) <= 0.25 * truth + 1e-9


def test_determinism():
    a = estimate_total(I5, 0, 2, 0.3, 0.2, seed=321)
    b = estimate_total(I5, 0, 2, 0.3, 0.2, seed=321)
    assert a == b
