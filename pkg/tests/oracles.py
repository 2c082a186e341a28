"""Deliberately naive reference implementations used to cross-check the package."""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction

from pcfcolor.graph import Graph, build_graph


def ok_brute(g: Graph, colors, variant: str) -> bool:
    for u, v in g.edge_list:
        if variant != "cf" and colors[u] == colors[v]:
            return False
    for v in range(g.n):
        if not g.adj[v] or variant == "proper":
            continue
        counts = Counter(colors[w] for w in g.adj[v])
        if variant == "odd" and not any(x % 2 for x in counts.values()):
            return False
        if variant in ("cf", "pcf") and 1 not in counts.values():
            return False
    return True


def brute_feasible(g: Graph, variant: str, k: int) -> bool:
    return any(ok_brute(g, c, variant) for c in itertools.product(range(1, k + 1), repeat=g.n))


def brute_value(g: Graph, variant: str) -> int:
    if g.n == 0:
        return 0
    k = 1
    while not brute_feasible(g, variant, k):
        k += 1
    return k


def brute_mad(g: Graph) -> Fraction:
    best = Fraction(0)
    for r in range(1, g.n + 1):
        for sub in itertools.combinations(range(g.n), r):
            s = set(sub)
            m = sum(1 for u, v in g.edge_list if u in s and v in s)
            best = max(best, Fraction(2 * m, r))
    return best


def brute_gamma_t(g: Graph) -> int | None:
    for r in range(1, g.n + 1):
        for D in itertools.combinations(range(g.n), r):
            ds = set(D)
            if all(any(w in ds for w in g.adj[v]) for v in range(g.n)):
                return r
    return None


def brute_canonical(g: Graph) -> tuple:
    """Lexicographically smallest sorted edge list over all relabelings."""
    return min(
        tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in g.edge_list))
        for p in itertools.permutations(range(g.n))
    )


def all_connected_brute(n: int) -> set[tuple]:
    pairs = list(itertools.combinations(range(n), 2))
    found = set()
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        g = build_graph(n, edges)
        if g.is_connected():
            found.add(brute_canonical(g))
    return found


def brute_claw_free(g: Graph) -> bool:
    for c in range(g.n):
        for x, y, z in itertools.combinations(g.adj[c], 3):
            if not (g.has_edge(x, y) or g.has_edge(x, z) or g.has_edge(y, z)):
                return False
    return True


def brute_cut_vertices(g: Graph) -> set[int]:
    base = len(g.components())
    cuts = set()
    for v in range(g.n):
        h, _ = g.without([v])
        if len(h.components()) > base:
            cuts.add(v)
    return cuts
