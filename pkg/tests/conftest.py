import random

import pytest

from chronopath.graph import TemporalGraph


def make_graph(n: int, edges) -> TemporalGraph:
    """Normalized graph from explicit (u, v, t) triples."""
    dedup = {(min(u, v), max(u, v), t) for u, v, t in edges}
    labels = sorted({t for _, _, t in dedup})
    remap = {t: i + 1 for i, t in enumerate(labels)}
    return TemporalGraph(
        n=n,
        time_edges=tuple(sorted((u, v, remap[t]) for u, v, t in dedup)),
        lifetime=len(labels),
    )


def random_instance(
    rng: random.Random,
    n_lo: int = 2,
    n_hi: int = 8,
    t_hi: int = 6,
    m_hi: int = 14,
) -> TemporalGraph:
    n = rng.randint(n_lo, n_hi)
    t_max = rng.randint(1, t_hi)
    m = rng.randint(1, m_hi)
    edges = set()
    for _ in range(m):
        u, v = rng.sample(range(n), 2)
        edges.add((min(u, v), max(u, v), rng.randint(1, t_max)))
    return make_graph(n, edges)


def theta_graph(path_lengths, labeller) -> TemporalGraph:
    """Two hubs joined by internally disjoint paths; labeller(i, j) -> label."""
    edges = []
    nxt = 2
    for i, length in enumerate(path_lengths):
        prev = 0
        for j in range(length - 1):
            edges.append((prev, nxt, labeller(i, j)))
            prev = nxt
            nxt += 1
        edges.append((prev, 1, labeller(i, length - 1)))
    return make_graph(nxt, edges)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


# Canonical tiny instances from the design discussions; vertices are
# s=0, v=1, z=2 unless noted.
I1 = make_graph(3, [(0, 1, 1), (1, 2, 2)])
I2 = make_graph(3, [(0, 1, 2), (1, 2, 1)])
I4 = make_graph(2, [(0, 1, 1), (0, 1, 2)])
I5 = make_graph(3, [(0, 1, 1), (1, 2, 2), (0, 2, 3)])
