"""Minimum total dominating sets by bounded exhaustive search."""

from __future__ import annotations

from ..errors import NoTotalDominatingSet
from ..graph import Graph


def _search(g: Graph, size: int, chosen: list[int], covered: list[int]) -> bool:
    first = next((v for v in range(g.n) if not covered[v]), None)
    if first is None:
        return True
    if len(chosen) == size:
        return False
    # Remaining budget must be able to cover the rest: one pick covers <= Delta.
    missing = covered.count(0)
    if missing > (size - len(chosen)) * g.max_degree:
        return False
    for d in g.adj[first]:
        if d in chosen:
            continue
        chosen.append(d)
        for w in g.adj[d]:
            covered[w] += 1
        if _search(g, size, chosen, covered):
            return True
        for w in g.adj[d]:
            covered[w] -= 1
        chosen.pop()
    return False


def is_total_dominating(g: Graph, D) -> bool:
    inside = set(D)
    return all(any(w in inside for w in g.adj[v]) for v in range(g.n))


def total_domination_number(g: Graph) -> tuple[int, frozenset[int]]:
    """``(gamma_t, D)`` for a graph without isolated vertices.

    Branches on the neighbors of the first undominated vertex, with iterative
    deepening on the set size, so the first success is a minimum.
    """
    if g.n == 0 or any(g.degree(v) == 0 for v in range(g.n)):
        raise NoTotalDominatingSet("a graph with an isolated vertex has no total dominating set")
    for size in range(2, g.n + 1):
        chosen: list[int] = []
        if _search(g, size, chosen, [0] * g.n):
            return size, frozenset(chosen)
    raise AssertionError("V(G) itself totally dominates")
