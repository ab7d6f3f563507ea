import random

import pytest

from chronopath.chordal import (
    ChordalInstance,
    _verify_clique_tree,
    build_clique_tree,
    count_mc_is_bruteforce,
    count_weighted_mc_is,
)
from chronopath.errors import NotChordalError


def random_interval_instance(rng: random.Random, n: int, k: int) -> ChordalInstance:
    """Interval graphs are chordal; separated intervals give disconnected ones."""
    spans = []
    for _ in range(n):
        a = rng.randint(0, 24)
        spans.append((a, a + rng.randint(0, 6)))
    edges = tuple(
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if spans[i][0] <= spans[j][1] and spans[j][0] <= spans[i][1]
    )
    return ChordalInstance(
        n=n,
        edges=edges,
        colour=tuple(rng.randint(1, k) for _ in range(n)),
        weight=tuple(rng.randint(0, 9) for _ in range(n)),
    )


def random_ktree_instance(rng: random.Random, n: int, k: int) -> ChordalInstance:
    base = rng.randint(1, 3)
    edges = set()
    cliques = [tuple(range(min(base + 1, n)))]
    for u in range(min(base + 1, n)):
        for v in range(u + 1, min(base + 1, n)):
            edges.add((u, v))
    for v in range(base + 1, n):
        host = list(rng.choice(cliques))
        rng.shuffle(host)
        chosen = host[:base]
        for u in chosen:
            edges.add((min(u, v), max(u, v)))
        cliques.append(tuple(sorted(chosen + [v])))
    return ChordalInstance(
        n=n,
        edges=tuple(sorted(edges)),
        colour=tuple(rng.randint(1, k) for _ in range(n)),
        weight=tuple(rng.randint(0, 9) for _ in range(n)),
    )


def test_examples():
    pair = ChordalInstance(n=2, edges=(), colour=(1, 2), weight=(2, 3))
    assert count_weighted_mc_is(pair, 2) == 6
    edge = ChordalInstance(n=2, edges=((0, 1),), colour=(1, 2), weight=(2, 3))
    assert count_weighted_mc_is(edge, 2) == 0
    path = ChordalInstance(n=3, edges=((0, 1), (1, 2)), colour=(1, 2, 2), weight=(2, 3, 5))
    assert count_weighted_mc_is(path, 2) == 10


def test_triangle_single_bag():
    tri = ChordalInstance(n=3, edges=((0, 1), (0, 2), (1, 2)), colour=(1, 1, 1), weight=(1, 1, 1))
    tree = build_clique_tree(tri)
    bags = []

    def collect(node):
        bags.append(node.bag)
        for c in node.children:
            collect(c)

    collect(tree)
    assert frozenset({0, 1, 2}) in bags
    assert count_weighted_mc_is(tri, 1) == 3


def test_four_cycle_rejected():
    square = ChordalInstance(
        n=4, edges=((0, 1), (1, 2), (2, 3), (0, 3)), colour=(1, 1, 1, 1), weight=(1, 1, 1, 1)
    )
    with pytest.raises(NotChordalError):
        build_clique_tree(square)
    with pytest.raises(NotChordalError):
        count_weighted_mc_is(square, 1)


def test_against_bruteforce_random():
    rng = random.Random(0xBEEF)
    for trial in range(150):
        n = rng.randint(1, 11)
        k = rng.randint(1, 4)
        if trial % 2:
            inst = random_interval_instance(rng, n, k)
        else:
            inst = random_ktree_instance(rng, n, k)
        assert count_weighted_mc_is(inst, k) == count_mc_is_bruteforce(inst, k)


def test_clique_tree_invariants():
    rng = random.Random(7)
    for _ in range(40):
        inst = random_interval_instance(rng, rng.randint(1, 10), 2)
        _verify_clique_tree(inst, build_clique_tree(inst))


def test_entry_bound():
    rng = random.Random(11)
    for _ in range(25):
        inst = random_interval_instance(rng, rng.randint(2, 12), 3)
        stats: dict = {}
        count_weighted_mc_is(inst, 3, stats=stats)
        assert stats["entries"] <= stats["bags"] * (2**3) * (stats["max_bag"] + 1)


def test_empty_graph_and_zero_weights():
    empty = ChordalInstance(n=0, edges=(), colour=(), weight=())
    assert count_weighted_mc_is(empty, 1) == 0
    zeroed = ChordalInstance(n=2, edges=(), colour=(1, 1), weight=(0, 4))
    assert count_weighted_mc_is(zeroed, 1) == 4
