"""Remove-recurse-reinsert plumbing shared by the inductive colorers."""

from __future__ import annotations

from collections.abc import Sequence

from ..errors import InternalContradiction
from ..exact.solver import extend_locally
from ..graph import Graph
from .outcome import reproducer


def peel_leaves(g: Graph) -> tuple[list[int], list[int]]:
    """Repeatedly drop vertices of degree <= 1 while more than one vertex remains.

    Returns the kept vertices and the removal order.
    """
    deg = list(g.degrees)
    alive = [True] * g.n
    remaining = g.n
    order = []
    stack = [v for v in range(g.n) if deg[v] <= 1]
    while stack and remaining > 1:
        u = stack.pop()
        if not alive[u] or deg[u] > 1:
            continue
        alive[u] = False
        remaining -= 1
        order.append(u)
        for w in g.adj[u]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    stack.append(w)
    return [v for v in range(g.n) if alive[v]], order


def extend_or_fail(g: Graph, colors: list[int], S: Sequence[int], k: int, what: str) -> None:
    """Color ``S`` in place on top of ``colors``; failure means a broken guarantee."""
    ext = extend_locally(g, colors, S, k)
    if ext is None:
        raise InternalContradiction(
            f"no valid extension at step {what} with {k} colors", reproducer(g, colors, what)
        )
    for s in S:
        colors[s] = ext[s]


def reinsert(g: Graph, colors: list[int], order: Sequence[int], k: int, what: str) -> None:
    """Add back peeled vertices (last removed first)."""
    for u in reversed(order):
        extend_or_fail(g, colors, [u], k, f"{what} {u}")
