"""Recognition of chordal and claw-free graphs."""

from __future__ import annotations

from itertools import combinations

from ..graph import Graph


def lexbfs(g: Graph) -> list[int]:
    """Lexicographic breadth-first search order (ties to the smallest label)."""
    labels: list[list[int]] = [[] for _ in range(g.n)]
    visited = [False] * g.n
    order = []
    for step in range(g.n):
        v = max((u for u in range(g.n) if not visited[u]), key=lambda u: (labels[u], -u))
        visited[v] = True
        order.append(v)
        for w in g.adj[v]:
            if not visited[w]:
                labels[w].append(g.n - step)
    return order


def is_peo(g: Graph, order: list[int]) -> bool:
    """True when every vertex's later neighbors in ``order`` form a clique."""
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in g.adj[v] if pos[w] > pos[v]]
        if any(not g.has_edge(x, y) for x, y in combinations(later, 2)):
            return False
    return True


def lexbfs_peo(g: Graph) -> list[int] | None:
    """A perfect elimination order if ``g`` is chordal, else ``None``."""
    order = lexbfs(g)[::-1]
    return order if is_peo(g, order) else None


def find_claw(g: Graph) -> tuple[int, int, int, int] | None:
    """An induced ``K_{1,3}`` as ``(center, leaf, leaf, leaf)``, or ``None``."""
    for v in range(g.n):
        for x, y, z in combinations(g.adj[v], 3):
            if not (g.has_edge(x, y) or g.has_edge(x, z) or g.has_edge(y, z)):
                return (v, x, y, z)
    return None


def is_claw_free(g: Graph) -> bool:
    return find_claw(g) is None
