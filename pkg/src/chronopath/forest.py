"""Exact temporal path counting when the underlying graph is a forest.

Between two vertices of a forest there is at most one static path, so a
temporal path's underlying edges are forced and we only choose labels.
The count follows from a left-to-right pass along that static path,
recording for each vertex v and time t how many temporal (s,v)-paths
arrive at time <= t:

    F(v_0 = s, t) = 1
    F(v_i, t)     = sum over labels t' <= t of edge {v_{i-1}, v_i} of F(v_{i-1}, t')

Each column F(v_i, .) is a non-decreasing step function with one breakpoint
per label of the incoming edge, so we store breakpoints instead of dense
T-length arrays; behaviour is unchanged and long lifetimes stay cheap.
"""

from __future__ import annotations

from bisect import bisect_right

from .errors import NotAForestError
from .graph import StaticGraph, TemporalGraph, underlying_graph


def _require_forest(static: StaticGraph) -> None:
    if not static.is_forest:
        raise NotAForestError("underlying graph contains a cycle")


def static_tree_path(static: StaticGraph, a: int, b: int) -> list[int] | None:
    """The unique a..b path of a forest as a vertex list, or None if disconnected."""
    if a == b:
        return [a]
    parent: dict[int, int] = {a: a}
    stack = [a]
    while stack:
        u = stack.pop()
        if u == b:
            break
        for w in static.adj[u]:
            if w not in parent:
                parent[w] = u
                stack.append(w)
    if b not in parent:
        return None
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    path.reverse()
    return path


class _StepFunction:
    """Non-decreasing step function t -> count, encoded as breakpoints."""

    __slots__ = ("times", "values")

    def __init__(self, times: list[int], values: list[int]):
        self.times = times
        self.values = values

    def at(self, t: int) -> int:
        i = bisect_right(self.times, t)
        return self.values[i - 1] if i else 0


def count_path_labels(
    label_lists: list[tuple[int, ...]], t_min: int = 1, t_max: int | None = None
) -> int:
    """Count non-decreasing label choices along a fixed static path.

    ``label_lists[i]`` holds the available labels of the i-th path edge.
    Only choices with first label >= t_min and last label <= t_max count.
    An empty path has exactly one realization (the trivial path).
    """
    cur = _StepFunction([t_min], [1])
    for labels in label_lists:
        times: list[int] = []
        values: list[int] = []
        running = 0
        for t in labels:  # labels come sorted
            f = cur.at(t)
            if f == 0:
                continue
            running += f
            times.append(t)
            values.append(running)
        if not times:
            return 0
        cur = _StepFunction(times, values)
    if t_max is None:
        return cur.values[-1] if cur.values else 0
    return cur.at(t_max)


def count_forest(g: TemporalGraph, s: int, z: int) -> int:
    """Number of temporal (s,z)-paths; requires a forest underlying graph."""
    static = underlying_graph(g)
    _require_forest(static)
    if s == z:
        return 1
    path = static_tree_path(static, s, z)
    if path is None:
        return 0
    labels = [g.edge_labels(path[i], path[i + 1]) for i in range(len(path) - 1)]
    return count_path_labels(labels)


def count_forest_window(
    g: TemporalGraph, a: int, b: int, t_min: int, t_max: int
) -> int:
    """Temporal (a,b)-paths whose first label is >= t_min and last <= t_max.

    a == b yields 1 (the trivial path waits inside any window).
    """
    if not 1 <= t_min <= t_max:
        raise ValueError(f"bad window [{t_min}, {t_max}]")
    static = underlying_graph(g)
    _require_forest(static)
    if a == b:
        return 1
    path = static_tree_path(static, a, b)
    if path is None:
        return 0
    labels = [g.edge_labels(path[i], path[i + 1]) for i in range(len(path) - 1)]
    return count_path_labels(labels, t_min=t_min, t_max=t_max)
