"""Exact counting parameterised by the feedback edge number.

After exhaustively pruning degree-<=1 vertices (which no (s,z)-path can
use), the underlying graph is a spanning forest plus f extra edges.  The
forest decomposes into few maximal degree-2 paths, so every static s-z
path is a short sequence of "links" (feedback edges and maximal paths) in
a condensed multigraph.  We enumerate those sequences and count, per
sequence, the temporal realizations along the expanded static path with
the forest DP.  The enumeration is capped at c * 8^f * (f+2)! sequences,
which the corpus instances stay well under.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

from .errors import EnumerationLimitError
from .graph import StaticGraph, TemporalGraph, underlying_graph

SEQUENCE_CAP_CONSTANT = 64


def prune_degree_one(g: TemporalGraph, s: int, z: int) -> TemporalGraph:
    """Strip time-edges of vertices that no (s,z)-path can visit.

    Repeatedly removes vertices of underlying degree <= 1 other than s and
    z together with their time-edges; the vertex set itself (and all dense
    ids) stay untouched, such vertices just become isolated.
    """
    degree = [0] * g.n
    static = underlying_graph(g)
    adj = {v: set(ws) for v, ws in static.adj.items()}
    for v in range(g.n):
        degree[v] = len(adj[v])
    removed = [False] * g.n
    queue = [v for v in range(g.n) if degree[v] <= 1 and v not in (s, z)]
    while queue:
        v = queue.pop()
        if removed[v]:
            continue
        removed[v] = True
        for w in adj[v]:
            if removed[w]:
                continue
            degree[w] -= 1
            if degree[w] <= 1 and w not in (s, z):
                queue.append(w)
    edges = tuple(e for e in g.time_edges if not removed[e[0]] and not removed[e[1]])
    return TemporalGraph(
        n=g.n,
        time_edges=edges,
        lifetime=max((t for _, _, t in edges), default=0),
        vertex_names=g.vertex_names,
        label_names=None,
    )


def feedback_edge_set(static: StaticGraph) -> frozenset[tuple[int, int]]:
    """Complement of a spanning forest; any spanning forest gives minimum size."""
    parent = list(range(static.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    feedback = []
    for u, v in sorted(static.edges):
        ru, rv = find(u), find(v)
        if ru == rv:
            feedback.append((u, v))
        else:
            parent[ru] = rv
    return frozenset(feedback)


@dataclass(frozen=True)
class CondensedGraph:
    """Terminals plus links; each link carries its static vertex sequence."""

    terminals: frozenset[int]
    links: tuple[tuple[int, ...], ...]  # vertex sequences, endpoints are terminals

    def incident_links(self) -> dict[int, list[int]]:
        inc: dict[int, list[int]] = {t: [] for t in self.terminals}
        for i, link in enumerate(self.links):
            inc[link[0]].append(i)
            if link[-1] != link[0]:
                inc[link[-1]].append(i)
        return inc


def condense(g: TemporalGraph, s: int, z: int) -> CondensedGraph:
    """Decompose the pruned underlying graph into terminals and links."""
    static = underlying_graph(g)
    feedback = feedback_edge_set(static)
    forest_adj: dict[int, list[int]] = {v: [] for v in range(static.n)}
    for u, v in static.edges:
        if (u, v) in feedback:
            continue
        forest_adj[u].append(v)
        forest_adj[v].append(u)
    terminals = {s, z}
    for u, v in feedback:
        terminals.add(u)
        terminals.add(v)
    for v in range(static.n):
        if static.degree(v) >= 3:
            terminals.add(v)

    links: list[tuple[int, ...]] = [(u, v) for u, v in sorted(feedback)]
    seen_edges: set[tuple[int, int]] = set()
    for start in sorted(terminals):
        for first in sorted(forest_adj[start]):
            key = (min(start, first), max(start, first))
            if key in seen_edges:
                continue
            path = [start, first]
            seen_edges.add(key)
            while path[-1] not in terminals:
                cur, prev = path[-1], path[-2]
                nxts = [w for w in forest_adj[cur] if w != prev]
                if not nxts:
                    break  # dangles at a degree-1 vertex; unusable by any s-z path
                path.append(nxts[0])
                seen_edges.add((min(cur, nxts[0]), max(cur, nxts[0])))
            if path[-1] in terminals:
                links.append(tuple(path))
    return CondensedGraph(terminals=frozenset(terminals), links=tuple(links))


def _sequence_cap(f: int) -> int:
    cap = SEQUENCE_CAP_CONSTANT * (8**f)
    for i in range(2, f + 3):
        cap *= i
    return cap


def count_fen(g: TemporalGraph, s: int, z: int) -> int:
    """Number of temporal (s,z)-paths, FPT in the feedback edge number."""
    if s == z:
        return 1
    pruned = prune_degree_one(g, s, z)
    if not pruned.time_edges:
        return 0
    condensed = condense(pruned, s, z)
    incident = condensed.incident_links()
    f = len(feedback_edge_set(underlying_graph(pruned)))
    cap = _sequence_cap(f)

    explored = 0
    total = 0
    labels_by_edge = pruned.labels_by_edge

    def extend(fn: tuple[list[int], list[int]], seq: tuple[int, ...]):
        """Advance the label-choice step function along a link; None if dead.

        fn encodes breakpoints (times, cumulative counts): fn evaluated at t
        is the number of temporal prefixes arriving by time t.
        """
        for a, b in zip(seq, seq[1:]):
            key = (a, b) if a < b else (b, a)
            ts = labels_by_edge.get(key)
            if not ts:
                return None
            times, values = fn
            new_times: list[int] = []
            new_values: list[int] = []
            running = 0
            for t in ts:
                i = bisect_right(times, t)
                if i:
                    running += values[i - 1]
                    new_times.append(t)
                    new_values.append(running)
            if not new_times:
                return None
            fn = (new_times, new_values)
        return fn

    def walk(cur: int, fn, used_links: set[int], visited: set[int]) -> None:
        nonlocal explored, total
        explored += 1
        if explored > cap:
            raise EnumerationLimitError(
                f"condensed sequence enumeration exceeded cap {cap} (f={f})"
            )
        if cur == z:
            total += fn[1][-1]
            return
        for li in incident[cur]:
            if li in used_links:
                continue
            link = condensed.links[li]
            seq = link if link[0] == cur else tuple(reversed(link))
            nxt = seq[-1]
            if nxt in visited:
                continue
            extended = extend(fn, seq)
            if extended is None:
                continue
            used_links.add(li)
            visited.add(nxt)
            walk(nxt, extended, used_links, visited)
            visited.remove(nxt)
            used_links.remove(li)

    walk(s, ([1], [1]), set(), {s})
    return total
