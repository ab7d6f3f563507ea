"""Vertex-interval-membership sequence and the bag-state counting DP.

The bag F_t holds every vertex with an incident time-edge both at some
time <= t and at some time >= t; the width of a temporal graph is the
largest bag.  Narrow bags make exact counting cheap even for enormous
lifetimes: the DP below runs in time linear in T at fixed width.

State (v, X) of bag F_t carries the number of temporal (s,v)-paths that
arrive by time t and meet F_t \\ {v} exactly in X.  Moving from t-1 to t,
previous states are carried over (vertices that fell out of the bag have
no future edges and are dropped from X), and paths arriving at exactly t
are added by gluing an initial segment that reached some u by t-1 to a
path inside the snapshot (V, E_t) starting at u.  The trivial segment
sitting at s is always available as an initial segment, which is how
paths departing s late are generated; it is injected rather than stored,
so it is never double counted.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property

from .graph import TemporalGraph


@dataclass(frozen=True)
class VIMSequence:
    """Bags F_1..F_T and their maximum size."""

    bags: tuple[frozenset[int], ...]

    @cached_property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0)

    def histogram(self) -> dict[int, int]:
        """Bag size -> number of times steps with that size."""
        hist: dict[int, int] = defaultdict(int)
        for b in self.bags:
            hist[len(b)] += 1
        return dict(sorted(hist.items()))


def _edge_window(g: TemporalGraph) -> tuple[dict[int, int], dict[int, int]]:
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for u, v, t in g.time_edges:
        for x in (u, v):
            if x not in first or t < first[x]:
                first[x] = t
            if x not in last or t > last[x]:
                last[x] = t
    return first, last


def vim_sequence(g: TemporalGraph) -> VIMSequence:
    """Exact vertex interval membership sequence of g."""
    first, last = _edge_window(g)
    bags = []
    for t in range(1, g.lifetime + 1):
        bags.append(
            frozenset(v for v in first if first[v] <= t <= last[v])
        )
    return VIMSequence(bags=tuple(bags))


def vimw_width(g: TemporalGraph) -> int:
    first, last = _edge_window(g)
    if not first:
        return 0
    events: dict[int, int] = defaultdict(int)
    for v in first:
        events[first[v]] += 1
        events[last[v] + 1] -= 1
    width = best = 0
    for t in sorted(events):
        best += events[t]
        width = max(width, best)
    return width


def count_vimw(g: TemporalGraph, s: int, z: int) -> int:
    """Number of temporal (s,z)-paths via the bag-state DP."""
    if s == z:
        return 1
    if not g.time_edges:
        return 0
    first, last = _edge_window(g)
    if z not in first:
        return 0
    # Trailing snapshots where z has no edge cannot host the final arrival.
    horizon = last[z]

    edges_at = g.edges_at
    # States: (vertex, mask over the current bag's local indices) -> count.
    states: dict[tuple[int, int], int] = {}
    prev_bag: list[int] = []
    prev_pos: dict[int, int] = {}
    final_total = 0

    for t in range(1, horizon + 1):
        bag = sorted(v for v in prev_pos if last[v] >= t)
        bag_set = set(bag)
        for u, v in edges_at.get(t, ()):
            if u not in bag_set:
                bag.append(u)
                bag_set.add(u)
            if v not in bag_set:
                bag.append(v)
                bag_set.add(v)
        bag.sort()
        pos = {v: i for i, v in enumerate(bag)}
        final = t == horizon

        # Carry states over, remapping masks and dropping departed vertices.
        carried: dict[tuple[int, int], int] = {}
        if states:
            keep_bits = [
                (1 << prev_pos[v], 1 << pos[v]) for v in prev_bag if v in pos
            ]
            for (v, mask), count in states.items():
                if v not in pos:
                    continue
                new_mask = 0
                for old_bit, new_bit in keep_bits:
                    if mask & old_bit:
                        new_mask |= new_bit
                key = (v, new_mask)
                carried[key] = carried.get(key, 0) + count

        snap = edges_at.get(t)
        if snap:
            adj: dict[int, list[int]] = defaultdict(list)
            for u, v in snap:
                adj[u].append(v)
                adj[v].append(u)
            for v in adj:
                adj[v].sort()

            arrivals: dict[tuple[int, int], int] = {}
            # Initial segments: carried states, plus the trivial segment at s.
            initial: list[tuple[int, int, int]] = [
                (u, y_mask, count) for (u, y_mask), count in carried.items()
            ]
            if s in adj:
                initial.append((s, 0, 1))
            for u, y_mask, count in initial:
                if u not in adj:
                    continue
                # Stream all simple snapshot paths out of u with an explicit
                # stack; on the last bag only the arrivals at z matter, so
                # they collapse into a running total instead of states.
                frames = [(1 << pos[u], iter(adj[u]))]
                while frames:
                    mask, neighbours = frames[-1]
                    for w in neighbours:
                        bit = 1 << pos[w]
                        if mask & bit or y_mask & bit:
                            continue
                        new_mask = mask | bit
                        if final:
                            if w == z:
                                final_total += count
                        else:
                            key = (w, (y_mask | new_mask) & ~bit)
                            arrivals[key] = arrivals.get(key, 0) + count
                        frames.append((new_mask, iter(adj[w])))
                        break
                    else:
                        frames.pop()
            for key, count in arrivals.items():
                carried[key] = carried.get(key, 0) + count

        if final:
            final_total += sum(
                count for (v, _mask), count in carried.items() if v == z
            )
            return final_total
        states = carried
        prev_bag = bag
        prev_pos = pos

    return final_total
