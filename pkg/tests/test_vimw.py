import time

from hypothesis import given, settings
from hypothesis import strategies as st

from chronopath.generate import diamond_chain, width_bounded_chain
from chronopath.oracle import count_paths_bf
from chronopath.vimw import count_vimw, vim_sequence, vimw_width

from conftest import I1, make_graph, random_instance


@st.composite
def small_temporal_graphs(draw):
    n = draw(st.integers(2, 6))
    raw = draw(
        st.sets(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), st.integers(1, 5)),
            min_size=1,
            max_size=10,
        )
    )
    edges = {(u, v, t) for u, v, t in raw if u != v}
    return make_graph(n, edges), n


def test_sequence_examples():
    g = make_graph(3, [(0, 1, 1), (1, 2, 2)])
    seq = vim_sequence(g)
    assert [set(b) for b in seq.bags] == [{0, 1}, {1, 2}]
    assert seq.width == 2
    assert vim_sequence(make_graph(2, [(0, 1, 1)])).width == 2
    assert vim_sequence(make_graph(3, [])).width == 0


def test_sequence_definition_bruteforce(rng):
    # v is in F_t iff v touches an edge at some i <= t and some j >= t.
    for _ in range(60):
        g = random_instance(rng)
        seq = vim_sequence(g)
        assert vimw_width(g) == seq.width
        for t in range(1, g.lifetime + 1):
            want = set()
            for v in range(g.n):
                times = [lab for w, lab in g.incident[v]]
                if times and min(times) <= t <= max(times):
                    want.add(v)
            assert set(seq.bags[t - 1]) == want


def test_membership_interval_contiguous(rng):
    for _ in range(40):
        g = random_instance(rng)
        seq = vim_sequence(g)
        for v in range(g.n):
            times = [t for t, bag in enumerate(seq.bags) if v in bag]
            assert times == list(range(min(times), max(times) + 1)) if times else True


def test_every_active_endpoint_in_bag(rng):
    for _ in range(40):
        g = random_instance(rng)
        seq = vim_sequence(g)
        for u, v, t in g.time_edges:
            assert u in seq.bags[t - 1] and v in seq.bags[t - 1]


def test_count_examples():
    assert count_vimw(I1, 0, 2) == 1
    d3 = diamond_chain(3)
    assert count_vimw(d3, 0, d3.n - 1) == 8
    lonely = make_graph(3, [(1, 2, 1)])
    assert count_vimw(lonely, 0, 2) == 0
    assert count_vimw(lonely, 0, 0) == 1


def test_against_oracle(rng):
    for _ in range(200):
        g = random_instance(rng, n_hi=8, t_hi=6, m_hi=16)
        for s in range(g.n):
            for z in range(g.n):
                assert count_vimw(g, s, z) == count_paths_bf(g, s, z), (
                    g.time_edges,
                    s,
                    z,
                )


@settings(max_examples=60, deadline=None)
@given(small_temporal_graphs(), st.integers(0, 35), st.integers(0, 35))
def test_against_oracle_hypothesis(gn, s_pick, z_pick):
    g, n = gn
    s, z = s_pick % n, z_pick % n
    assert count_vimw(g, s, z) == count_paths_bf(g, s, z)


def test_long_narrow_instance_is_fast():
    g = width_bounded_chain(10_000, width3=False)
    assert vimw_width(g) == 2
    start = time.perf_counter()
    assert count_vimw(g, 0, 10_000) == 1
    assert time.perf_counter() - start < 10.0


def test_histogram():
    g = width_bounded_chain(50)
    hist = vim_sequence(g).histogram()
    assert set(hist) == {3}
    assert hist[3] == 50
