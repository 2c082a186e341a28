"""Canonical forms by partition refinement plus individualization, and
enumeration of small connected graphs up to isomorphism."""

from __future__ import annotations

from collections.abc import Iterator
from functools import cache

from .errors import UseIngestion
from .graph import Graph, build_graph

MAX_ENUM_N = 8


def _masks(g: Graph) -> list[int]:
    return [sum(1 << w for w in g.adj[v]) for v in range(g.n)]


def _refine(adj: list[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement; cells split by neighbor counts, in sorted order."""
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((adj[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            out.extend(groups[s] for s in sorted(groups))
        if len(out) == len(cells):
            return out
        cells = out


def _code(adj: list[int], order: list[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def _twin_classes(adj: list[int], cell: list[int]) -> list[int]:
    """One representative per class of interchangeable (twin) vertices."""
    reps: list[int] = []
    for v in cell:
        if not any((adj[v] & ~(1 << r)) == (adj[r] & ~(1 << v)) for r in reps):
            reps.append(v)
    return reps


def canonical_order(g: Graph) -> list[int]:
    """A vertex order whose adjacency string is minimal over the search tree."""
    adj = _masks(g)
    best: tuple[int, list[int]] | None = None
    stack = [_refine(adj, [list(range(g.n))])]
    while stack:
        cells = stack.pop()
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = _code(adj, order)
            if best is None or code < best[0]:
                best = (code, order)
            continue
        cell = cells[target]
        for v in reversed(_twin_classes(adj, cell)):
            rest = [w for w in cell if w != v]
            stack.append(_refine(adj, cells[:target] + [[v], rest] + cells[target + 1 :]))
    return best[1] if best else []


def canonical_form(g: Graph) -> tuple[int, int]:
    """``(n, code)``; equal exactly for isomorphic graphs."""
    order = canonical_order(g)
    return g.n, _code(_masks(g), order)


def canonical_graph(g: Graph) -> Graph:
    order = canonical_order(g)
    pos = {v: i for i, v in enumerate(order)}
    return build_graph(g.n, [(pos[u], pos[v]) for u, v in g.edge_list])


def _from_code(n: int, code: int) -> Graph:
    edges = []
    bit = n * (n - 1) // 2 - 1
    for j in range(1, n):
        for i in range(j):
            if code >> bit & 1:
                edges.append((i, j))
            bit -= 1
    return build_graph(n, edges)


def enumerate_connected(n: int) -> Iterator[Graph]:
    """Every connected graph on ``n`` vertices once, in canonical-code order.

    Each one arises from a connected graph on ``n - 1`` vertices by adding a
    vertex with a nonempty neighborhood (delete a non-cut vertex to see it).
    """
    if not 1 <= n <= MAX_ENUM_N:
        raise UseIngestion(f"built-in enumeration covers 1 <= n <= {MAX_ENUM_N}; ingest graph6 files for n={n}")
    for code in _connected_codes(n):
        yield _from_code(n, code)


@cache
def _connected_codes(n: int) -> tuple[int, ...]:
    if n == 1:
        return (0,)
    seen: set[int] = set()
    for code in _connected_codes(n - 1):
        small = _from_code(n - 1, code)
        for subset in range(1, 1 << (n - 1)):
            edges = list(small.edge_list) + [(i, n - 1) for i in range(n - 1) if subset >> i & 1]
            seen.add(canonical_form(build_graph(n, edges))[1])
    return tuple(sorted(seen))
