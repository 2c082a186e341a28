from __future__ import annotations

import itertools
import time
from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from ..errors import TooLargeFrontier
from ..graph import Graph
from ..verify import UNASSIGNED, Coloring, Variant
from . import _backend

_CODES = {Variant.PROPER: 0, Variant.ODD: 1, Variant.CF: 2, Variant.PCF: 3}

MAX_FRONTIER = 6


@dataclass
class SolveResult:
    variant: Variant
    value: int
    witness: Coloring
    nodes_explored: int
    time: float


def search_order(g: Graph) -> list[int]:
    """Reverse degeneracy order, larger original degree first among ties."""
    deg = list(g.degrees)
    alive = [True] * g.n
    peeled = []
    for _ in range(g.n):
        v = min((u for u in range(g.n) if alive[u]), key=lambda u: (deg[u], g.degrees[u], u))
        alive[v] = False
        peeled.append(v)
        for w in g.adj[v]:
            if alive[w]:
                deg[w] -= 1
    peeled.reverse()
    return peeled


def _decide(g: Graph, variant: Variant, k: int, backend: str | None = None) -> tuple[list[int] | None, int]:
    search = _backend.get_search(backend)
    return search(g.adj, search_order(g), k, _CODES[variant])


def decide_k(g: Graph, variant: Variant | str, k: int, backend: str | None = None) -> Coloring | None:
    """A ``variant`` coloring with palette ``1..k``, or ``None`` when none exists."""
    colors, _ = _decide(g, Variant.parse(variant), k, backend)
    return None if colors is None else Coloring(tuple(colors), k)


def chromatic_value(g: Graph, variant: Variant | str, backend: str | None = None) -> SolveResult:
    """Least feasible palette size, by increasing ``k``.

    Conventions: the empty graph has value 0; any graph without edges has
    value 1 (no vertex is constrained).
    """
    variant = Variant.parse(variant)
    start = time.perf_counter()
    total = 0
    if g.n == 0:
        return SolveResult(variant, 0, Coloring((), 0), 0, 0.0)
    k = 1
    while True:
        colors, nodes = _decide(g, variant, k, backend)
        total += nodes
        if colors is not None:
            return SolveResult(variant, k, Coloring(tuple(colors), k), total, time.perf_counter() - start)
        k += 1


def extend_locally(
    g: Graph, base: Sequence[int] | Coloring, S: Iterable[int], k: int
) -> Coloring | None:
    """Color the vertices ``S`` on top of ``base`` so the result stays PCF.

    Vertices outside ``S`` that ``base`` leaves unassigned are treated as
    absent, so the search acts on the subgraph induced by the colored
    vertices plus ``S``. Candidates run in lexicographic color order; the first
    one that keeps every edge at ``S`` proper and every vertex of ``S`` and
    every present neighbor of ``S`` conflict-free is returned.
    """
    S = list(dict.fromkeys(S))
    if len(S) > MAX_FRONTIER:
        raise TooLargeFrontier(f"frontier of {len(S)} vertices exceeds {MAX_FRONTIER}")
    colors = list(Coloring.of(base).colors)
    for s in S:
        colors[s] = UNASSIGNED
    in_s = set(S)
    present = [c != UNASSIGNED or v in in_s for v, c in enumerate(colors)]

    affected = set(S)
    for s in S:
        affected.update(w for w in g.adj[s] if present[w])
    watch = [(x, [w for w in g.adj[x] if present[w]]) for x in sorted(affected)]
    watch = [(x, nb) for x, nb in watch if nb]
    s_edges = sorted({(min(s, w), max(s, w)) for s in S for w in g.adj[s] if present[w]})

    for combo in itertools.product(range(1, k + 1), repeat=len(S)):
        for s, c in zip(S, combo):
            colors[s] = c
        if any(colors[u] == colors[w] for u, w in s_edges):
            continue
        if all(1 in Counter(colors[w] for w in nb).values() for _, nb in watch):
            return Coloring(tuple(colors), k)
    return None
