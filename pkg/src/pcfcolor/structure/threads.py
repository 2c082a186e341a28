"""Threads (runs of degree-2 vertices), big-vertex distances, and the
thread/big-vertex matching used by the girth-6 four-coloring."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import HypothesisViolated, InternalContradiction
from ..graph import INF, Graph, girth


@dataclass(frozen=True)
class ThreadDescriptor:
    """``endpoints[0] - internal... - endpoints[1]``; internal vertices have degree 2."""

    endpoints: tuple[int, int]
    internal: tuple[int, ...]

    @property
    def is_cycle_thread(self) -> bool:
        return self.endpoints[0] == self.endpoints[1]

    @property
    def walk(self) -> list[int]:
        return [self.endpoints[0], *self.internal, self.endpoints[1]]


@dataclass(frozen=True)
class Run:
    """A maximal sequence of degree-2 vertices that is not a whole cycle.

    ``ends`` are the outside neighbors of the first and last internal vertex
    (equal for a cycle-thread through a single vertex).
    """

    internal: tuple[int, ...]
    ends: tuple[int, int]


def degree_two_runs(g: Graph) -> tuple[list[Run], list[list[int]]]:
    """Split the degree-2 vertices into maximal path runs and 2-regular components.

    Each cycle component is listed in cyclic order starting at its smallest vertex.
    """
    two = [g.degree(v) == 2 for v in range(g.n)]
    seen = [False] * g.n

    def walk(start: int, first: int) -> tuple[list[int], int]:
        path, prev, cur = [], start, first
        while two[cur] and cur != start:
            path.append(cur)
            a, b = g.adj[cur]
            prev, cur = cur, (b if a == prev else a)
        return path, cur

    runs: list[Run] = []
    cycles: list[list[int]] = []
    for s in range(g.n):
        if not two[s] or seen[s]:
            continue
        a, b = g.adj[s]
        right, right_end = walk(s, b)
        if right_end == s:
            cycles.append([s, *right])
            for v in right:
                seen[v] = True
            seen[s] = True
            continue
        left, left_end = walk(s, a)
        internal = [*reversed(left), s, *right]
        for v in internal:
            seen[v] = True
        ends = (left_end, right_end)
        if (internal[0], ends[0]) > (internal[-1], ends[1]):
            internal.reverse()
            ends = (right_end, left_end)
        runs.append(Run(tuple(internal), ends))
    return runs, cycles


def find_thread(g: Graph, length: int) -> ThreadDescriptor | None:
    """Some trail with ``length`` internal degree-2 vertices, or ``None``."""
    if length < 1:
        raise ValueError("thread length must be positive")
    runs, cycles = degree_two_runs(g)
    for run in runs:
        if len(run.internal) >= length:
            inside = run.internal[:length]
            far = run.internal[length] if len(run.internal) > length else run.ends[1]
            return ThreadDescriptor((run.ends[0], far), inside)
    for cyc in cycles:
        if len(cyc) >= length + 1:
            walk = (cyc + cyc)[: length + 2]
            return ThreadDescriptor((walk[0], walk[-1]), tuple(walk[1:-1]))
    return None


def is_thread(g: Graph, t: ThreadDescriptor) -> bool:
    walk = t.walk
    if len(set(t.internal)) != len(t.internal) or any(g.degree(v) != 2 for v in t.internal):
        return False
    edges = [frozenset(e) for e in zip(walk, walk[1:])]
    return all(g.has_edge(u, v) for u, v in zip(walk, walk[1:])) and len(set(edges)) == len(edges)


def big_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) >= 3]


def big_vertex_distances(g: Graph) -> tuple[frozenset[int], float]:
    """The vertices of degree at least 3 and their minimum pairwise distance."""
    big = big_vertices(g)
    best: float = INF
    targets = set(big)
    for v in big:
        dist = g.bfs_distances(v)
        for u in targets:
            if u != v and dist[u] < best:
                best = dist[u]
    return frozenset(big), best


def _augment(a: int, adj: dict[int, list[int]], match_b: dict[int, int], seen: set[int]) -> bool:
    for b in adj[a]:
        if b in seen:
            continue
        seen.add(b)
        if b not in match_b or _augment(match_b[b], adj, match_b, seen):
            match_b[b] = a
            return True
    return False


def bipartite_matching(left: list[int], adj: dict[int, list[int]]) -> dict[int, int]:
    """Maximum matching by augmenting paths; returns ``{left vertex: right vertex}``."""
    match_b: dict[int, int] = {}
    for a in left:
        _augment(a, adj, match_b, set())
    return {a: b for b, a in match_b.items()}


def check_thread66_hypotheses(g: Graph) -> frozenset[int]:
    gi = girth(g)
    if gi < 6:
        raise HypothesisViolated("girth", f"girth {gi} < 6")
    big, dist = big_vertex_distances(g)
    if dist < 6:
        raise HypothesisViolated("distance", f"two vertices of degree >= 3 at distance {dist} < 6")
    return big


def thread_incidence_matching(g: Graph) -> dict[int, list[int]]:
    """Assign to every vertex of degree >= 3 its own maximal path-thread.

    Returns ``{v: [v, w1, w2, ...]}``: the walk starts at ``v`` and runs along
    the internal degree-2 vertices (followed by the far end when that end is a
    leaf). Assigned walks are pairwise disjoint.
    """
    big = check_thread66_hypotheses(g)
    if not big:
        raise HypothesisViolated("K empty", "no vertex of degree >= 3")
    runs, _ = degree_two_runs(g)
    threads = [r for r in runs if r.ends[0] in big or r.ends[1] in big]
    adj: dict[int, list[int]] = {v: [] for v in sorted(big)}
    for i, r in enumerate(threads):
        for end in dict.fromkeys(r.ends):
            if end in big:
                adj[end].append(i)
    match = bipartite_matching(sorted(big), adj)
    if len(match) != len(big):
        raise InternalContradiction(
            "thread matching does not saturate the big vertices",
            {"unmatched": sorted(set(big) - set(match))},
        )
    out = {}
    for v, i in sorted(match.items()):
        r = threads[i]
        internal = list(r.internal) if r.ends[0] == v else list(reversed(r.internal))
        far = r.ends[1] if r.ends[0] == v else r.ends[0]
        walk = [v, *internal]
        if far is not None and far not in big and g.degree(far) == 1:
            walk.append(far)
        out[v] = walk
    return out
