"""Colorings of subdivided graphs: perfect-matching and spanning-forest
subdivisions, and the 4-coloring for sparse 3+-vertices at girth >= 6."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence

from ..errors import BadBase, BadForest, BadMatching, NotConnected
from ..graph import Edge, Graph, subdivide
from ..structure.threads import check_thread66_hypotheses, degree_two_runs, thread_incidence_matching
from ..verify import Coloring, Variant, verify
from .basic import color_path_endpoints, cycle_pattern
from .outcome import ConstructionOutcome, finish
from .peel import peel_leaves, reinsert


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def _proper(g: Graph, coloring) -> list[int]:
    colors = list(Coloring.of(coloring).colors)
    if len(colors) != g.n or not verify(g, colors, Variant.PROPER).ok:
        raise BadBase("base coloring is not proper")
    return colors


def color_subdivided_matching(
    gbase: Graph, M: Iterable[Sequence[int]], proper: Sequence[int] | Coloring
) -> ConstructionOutcome:
    """Color ``S(gbase)`` given a perfect matching ``M`` of ``gbase``."""
    base = _proper(gbase, proper)
    matching = {_edge(*e) for e in M}
    mate: dict[int, Edge] = {}
    for e in matching:
        if not gbase.has_edge(*e):
            raise BadMatching(f"{e} is not an edge")
        for x in e:
            if x in mate:
                raise BadMatching(f"vertex {x} is covered twice")
            mate[x] = e
    if len(mate) != gbase.n:
        raise BadMatching("matching is not perfect")
    g, chains = subdivide(gbase, 1)
    colors = base + [0] * (g.n - gbase.n)
    chi = max(base, default=0)
    if chi <= 2:
        for e, (w,) in chains.items():
            colors[w] = 3 if e in matching else 4
        return finish(g, colors, 4, ["bipartite: matching 3, rest 4"], "color_subdivided_matching")
    for e in sorted(matching):
        (w,) = chains[e]
        colors[w] = min(c for c in range(1, 6) if c not in (base[e[0]], base[e[1]]))
    for e, (w,) in chains.items():
        if e in matching:
            continue
        x, y = e
        banned = {base[x], base[y], colors[chains[mate[x]][0]], colors[chains[mate[y]][0]]}
        colors[w] = min(c for c in range(1, 6) if c not in banned)
    return finish(g, colors, max(5, chi), ["general: matching first, then <= 4 forbidden"], "color_subdivided_matching")


def color_subdivided_forest(
    gbase: Graph,
    F: Iterable[Sequence[int]],
    extra: Iterable[Sequence[int]],
    proper: Sequence[int] | Coloring,
) -> ConstructionOutcome:
    """Subdivide the spanning forest ``F`` (and the ``extra`` edges) once.

    Forest subdividers alternate the fresh colors ``x = chi+1`` and
    ``y = chi+2`` by depth from a leaf root of each component.
    """
    base = _proper(gbase, proper)
    forest = sorted({_edge(*e) for e in F})
    more = sorted({_edge(*e) for e in extra} - set(forest))
    fadj: dict[int, list[int]] = {v: [] for v in range(gbase.n)}
    for e in forest + more:
        if not gbase.has_edge(*e):
            raise BadForest(f"{e} is not an edge")
    for u, v in forest:
        fadj[u].append(v)
        fadj[v].append(u)
    if any(not fadj[v] for v in range(gbase.n)):
        raise BadForest("the forest leaves an isolated vertex")
    if len(forest) != gbase.n - _count_components(fadj):
        raise BadForest("F contains a cycle")
    g, chains = subdivide(gbase, {e: 1 for e in forest + more})
    chi = max(base, default=0)
    x, y = chi + 1, chi + 2
    colors = base + [0] * (g.n - gbase.n)
    depth = [-1] * gbase.n
    for root in range(gbase.n):
        if depth[root] != -1 or len(fadj[root]) != 1:
            continue
        depth[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in fadj[u]:
                if depth[v] == -1:
                    depth[v] = depth[u] + 1
                    colors[chains[_edge(u, v)][0]] = x if depth[u] % 2 == 0 else y
                    queue.append(v)
    for u, v in more:
        banned = {base[u], base[v], x, y}
        colors[chains[(u, v)][0]] = min(c for c in range(1, 6 + chi) if c not in banned)
    if more:
        bound = max(5, chi + 2)
    elif all(len(fadj[v]) == 1 for v in fadj):
        bound = chi + 1
    else:
        bound = chi + 2
    trace = [f"forest subdividers alternate {x}/{y}", f"{len(more)} extra subdividers"]
    return finish(g, colors, bound, trace, "color_subdivided_forest")


def _count_components(adj: dict[int, list[int]]) -> int:
    seen: set[int] = set()
    comps = 0
    for s in adj:
        if s in seen:
            continue
        comps += 1
        stack = [s]
        seen.add(s)
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return comps


def _core_thread66(core: Graph, trace: list[str]) -> list[int]:
    runs, cycles = degree_two_runs(core)
    if cycles and len(cycles[0]) == core.n:
        trace.append("cycle")
        colors = [0] * core.n
        for v, c in zip(cycles[0], cycle_pattern(core.n)):
            colors[v] = c
        return colors
    assigned = thread_incidence_matching(core)
    trace.append(f"matching saturates {len(assigned)} vertices of degree >= 3")
    colors = [0] * core.n
    for v, walk in assigned.items():
        colors[v] = 4
        inner = walk[1:]
        for w, c in zip(inner, color_path_endpoints(len(inner), 1, 2)):
            colors[w] = c
    for run in runs:
        if colors[run.internal[0]]:
            continue
        for w, c in zip(run.internal, color_path_endpoints(len(run.internal), 2, 2)):
            colors[w] = c
    trace.append("remaining threads colored with both ends 2")
    return colors


def color_thread66(g: Graph) -> ConstructionOutcome:
    """4-coloring when girth >= 6 and vertices of degree >= 3 are pairwise >= 6 apart."""
    if not g.is_connected():
        raise NotConnected("color_thread66 needs a connected graph")
    check_thread66_hypotheses(g)
    trace: list[str] = []
    keep, order = peel_leaves(g)
    if order:
        trace.append(f"peeled {len(order)} vertices of degree 1")
    core, labels = g.induced(keep)
    colors = [0] * g.n
    if core.n == 1:
        colors[labels[0]] = 1
    else:
        for v, c in zip(labels, _core_thread66(core, trace)):
            colors[v] = c
    reinsert(g, colors, order, 4, "thread66 leaf")
    return finish(g, colors, 4, trace, "color_thread66")
