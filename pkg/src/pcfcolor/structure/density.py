"""Exact maximum average degree via Goldberg's density network."""

from __future__ import annotations

import math
from collections import deque
from fractions import Fraction

from ..graph import Graph


class _Dinic:
    def __init__(self, size: int) -> None:
        self.size = size
        self.head: list[list[int]] = [[] for _ in range(size)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add(self, u: int, v: int, c: int, back: int = 0) -> None:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(c)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(back)

    def _levels(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.size
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for e in self.head[u]:
                if self.cap[e] > 0 and level[self.to[e]] < 0:
                    level[self.to[e]] = level[u] + 1
                    queue.append(self.to[e])
        return level if level[t] >= 0 else None

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        while (level := self._levels(s, t)) is not None:
            ptr = [0] * self.size
            while True:
                pushed = self._push(s, t, level, ptr)
                if not pushed:
                    break
                total += pushed
        return total

    def _push(self, s: int, t: int, level: list[int], ptr: list[int]) -> int:
        # Iterative DFS along the level graph; returns the bottleneck of one path.
        path: list[int] = []
        u = s
        while True:
            if u == t:
                flow = min(self.cap[e] for e in path)
                for e in path:
                    self.cap[e] -= flow
                    self.cap[e ^ 1] += flow
                return flow
            edges = self.head[u]
            while ptr[u] < len(edges):
                e = edges[ptr[u]]
                v = self.to[e]
                if self.cap[e] > 0 and level[v] == level[u] + 1:
                    break
                ptr[u] += 1
            else:
                if u == s:
                    return 0
                level[u] = -1
                e = path.pop()
                u = self.to[e ^ 1]
                ptr[u] += 1
                continue
            path.append(edges[ptr[u]])
            u = self.to[edges[ptr[u]]]


def denser_than(g: Graph, lam: Fraction) -> bool:
    """Whether some subgraph has ``|E(H)| / |V(H)| > lam``."""
    n, m = g.n, g.m
    p, q = lam.numerator, lam.denominator
    s, t = n, n + 1
    net = _Dinic(n + 2)
    for v in range(n):
        net.add(s, v, m * q)
        net.add(v, t, m * q + 2 * p - g.degree(v) * q)
    for u, v in g.edge_list:
        net.add(u, v, q, q)
    return net.max_flow(s, t) < m * n * q


def max_density(g: Graph) -> Fraction:
    """Maximum of ``|E(H)| / |V(H)|`` over nonempty subgraphs ``H``.

    Densities are fractions with denominator at most ``n``, and two such
    fractions differ by at least ``1/(n(n-1))``. Bisection keeps the optimum
    in ``(lo, hi]`` until the interval is that narrow, then reads it off.
    """
    n = g.n
    if g.m == 0:
        return Fraction(0)
    lo, hi = Fraction(0), Fraction(n - 1, 2)
    gap = Fraction(1, n * (n - 1))
    while hi - lo >= gap:
        mid = (lo + hi) / 2
        if denser_than(g, mid):
            lo = mid
        else:
            hi = mid
    for b in range(1, n + 1):
        cand = Fraction(math.floor(hi * b), b)
        if cand > lo:
            return cand
    raise AssertionError("no density candidate in the final interval")


def mad(g: Graph) -> Fraction:
    """Maximum average degree ``2 * max_density``, as an exact fraction."""
    return 2 * max_density(g)
