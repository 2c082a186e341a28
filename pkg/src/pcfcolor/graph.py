"""Immutable simple graphs and elementary parameters.

Vertices are the dense integers ``0..n-1``. Adjacency lists are sorted tuples,
so two ``Graph`` objects compare equal exactly when they have the same labelled
edge set.
"""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import InvalidEdge, InvalidSpec

INF = math.inf

Edge = tuple[int, int]


class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "adj", "m", "__dict__")

    def __init__(self, n: int, adj: Sequence[Sequence[int]]) -> None:
        # Trusted constructor: callers go through build_graph() for validation.
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(a) for a in adj)
        self.m = sum(len(a) for a in self.adj) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    @cached_property
    def adjsets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjsets[u]

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adj)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    @cached_property
    def edge_list(self) -> tuple[Edge, ...]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return tuple((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    def edges(self) -> tuple[Edge, ...]:
        return self.edge_list

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edge_list)}

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph, relabelled in increasing order of the kept vertices.

        Returns the subgraph and the list mapping new labels to old ones.
        """
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        adj = [[index[w] for w in self.adj[v] if w in index] for v in keep]
        return Graph(len(keep), adj), keep

    def without(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        drop = set(vertices)
        return self.induced(v for v in range(self.n) if v not in drop)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return build_graph(self.n, [(perm[u], perm[v]) for u, v in self.edge_list])

    def bfs_distances(self, source: int) -> list[float]:
        dist: list[float] = [INF] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in self.adj[u]:
                if dist[w] == INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist


def build_graph(n: int, edges: Iterable[Sequence[int]], strict: bool = False) -> Graph:
    """Validate an edge list and return the canonical graph.

    Duplicate pairs collapse to one edge unless ``strict`` is set, in which case
    they raise ``InvalidEdge`` like loops and out-of-range endpoints do.
    """
    if n < 0:
        raise InvalidEdge(f"negative vertex count {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidEdge(f"endpoint out of range in edge ({u}, {v}) for n={n}")
        if u == v:
            raise InvalidEdge(f"loop at vertex {u}")
        if strict and v in nbrs[u]:
            raise InvalidEdge(f"duplicate edge ({u}, {v})")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, [sorted(s) for s in nbrs])


def subdivide(
    g: Graph, counts: int | Sequence[int] | Mapping[Edge, int]
) -> tuple[Graph, dict[Edge, list[int]]]:
    """Replace each edge ``uv`` by a path with ``counts[uv]`` new internal vertices.

    ``counts`` is a single integer (uniform), a sequence aligned with
    ``g.edge_list``, or a mapping keyed by ``(u, v)`` with ``u < v`` (missing
    edges count 0). New vertices are numbered from ``g.n`` upward, edge by edge
    in ``edge_list`` order, each chain running from ``u`` towards ``v``.
    Returns the new graph and ``{(u, v): [w1, ..., wc]}``.
    """
    edges = g.edge_list
    if isinstance(counts, int):
        per_edge = [counts] * len(edges)
    elif isinstance(counts, Mapping):
        per_edge = [counts.get(e, 0) for e in edges]
        unknown = set(counts) - set(edges)
        if unknown:
            raise InvalidSpec(f"subdivision counts for non-edges {sorted(unknown)}")
    else:
        per_edge = list(counts)
        if len(per_edge) != len(edges):
            raise InvalidSpec(f"expected {len(edges)} counts, got {len(per_edge)}")
    if any(c < 0 for c in per_edge):
        raise InvalidSpec("subdivision counts must be non-negative")

    nxt = g.n
    new_edges: list[Edge] = []
    chains: dict[Edge, list[int]] = {}
    for (u, v), c in zip(edges, per_edge):
        chain = list(range(nxt, nxt + c))
        nxt += c
        chains[(u, v)] = chain
        path = [u, *chain, v]
        new_edges.extend(zip(path, path[1:]))
    return build_graph(nxt, new_edges), chains


def cartesian_product(a: Graph, b: Graph) -> Graph:
    """Cartesian product; vertex ``(i, j)`` is numbered ``i * b.n + j``."""
    if a.n == 0 or b.n == 0:
        raise InvalidSpec("cartesian product needs two nonempty graphs")
    edges = []
    for i in range(a.n):
        for j1, j2 in b.edge_list:
            edges.append((i * b.n + j1, i * b.n + j2))
    for i1, i2 in a.edge_list:
        for j in range(b.n):
            edges.append((i1 * b.n + j, i2 * b.n + j))
    return build_graph(a.n * b.n, edges)


def line_graph(g: Graph) -> Graph:
    """Line graph; vertex ``i`` is edge ``g.edge_list[i]``."""
    edges = []
    index = g.edge_index
    for v in range(g.n):
        inc = [index[(min(v, w), max(v, w))] for w in g.adj[v]]
        edges.extend((x, y) for i, x in enumerate(inc) for y in inc[i + 1 :])
    return build_graph(g.m, edges)


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``INF`` for forests."""
    best = INF
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def degeneracy_order(g: Graph) -> tuple[list[int], int]:
    """Minimum-degree peeling order (ties to the smallest label) and the degeneracy."""
    deg = list(g.degrees)
    removed = [False] * g.n
    order = []
    k = 0
    buckets: list[set[int]] = [set() for _ in range(max(deg, default=0) + 1)]
    for v, d in enumerate(deg):
        buckets[d].add(v)
    lo = 0
    for _ in range(g.n):
        lo = max(0, lo - 1)
        while not buckets[lo]:
            lo += 1
        v = min(buckets[lo])
        buckets[lo].discard(v)
        removed[v] = True
        order.append(v)
        k = max(k, lo)
        for w in g.adj[v]:
            if not removed[w]:
                buckets[deg[w]].discard(w)
                deg[w] -= 1
                buckets[deg[w]].add(w)
    return order, k


def degeneracy(g: Graph) -> int:
    return degeneracy_order(g)[1]


@dataclass(frozen=True)
class GraphStats:
    max_degree: int
    min_degree: int
    girth: float
    degeneracy: int
    connected: bool
    mad: Fraction


def stats(g: Graph) -> GraphStats:
    from .structure.density import mad

    return GraphStats(
        max_degree=g.max_degree,
        min_degree=g.min_degree,
        girth=girth(g),
        degeneracy=degeneracy(g),
        connected=g.is_connected(),
        mad=mad(g) if g.n else Fraction(0),
    )


def is_valid(g: Graph) -> bool:
    """Representation invariants: sorted, loop-free, duplicate-free, symmetric."""
    for v, nb in enumerate(g.adj):
        if list(nb) != sorted(set(nb)) or v in nb:
            return False
        if any(not (0 <= w < g.n) or v not in g.adjsets[w] for w in nb):
            return False
    return 2 * g.m == sum(g.degrees)
