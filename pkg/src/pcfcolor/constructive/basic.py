"""Pattern colorings: trees, cycles, cubes, paths with fixed ends, SK_n,
coronas, total domination and the product construction."""

from __future__ import annotations

from collections import Counter, deque
from collections.abc import Iterable, Sequence

from ..errors import (
    BadBase,
    BadColor,
    BadDominatingSet,
    InvalidSpec,
    NotATree,
    TooShort,
)
from ..families import Complete, Cycle, Hypercube, generate
from ..graph import Graph, build_graph, subdivide
from ..structure.domination import is_total_dominating
from ..verify import Coloring, Variant, verify
from .outcome import ConstructionOutcome, finish


def _palette(coloring: Sequence[int] | Coloring) -> list[int]:
    return list(Coloring.of(coloring).colors)


def _require(g: Graph, coloring, mode: Variant, err: type[Exception], what: str) -> list[int]:
    colors = _palette(coloring)
    if len(colors) != g.n or not verify(g, colors, mode).ok:
        raise err(f"{what} is not a valid {mode.value} coloring")
    return colors


def lone_unique(counts: Counter) -> int | None:
    """The color occurring exactly once, if there is exactly one such color."""
    singles = [c for c, x in counts.items() if x == 1]
    return singles[0] if len(singles) == 1 else None


def color_tree(t: Graph) -> ConstructionOutcome:
    """Leaf-by-leaf insertion in BFS order, palette ``{1, 2, 3}``."""
    if t.n < 2 or t.m != t.n - 1 or not t.is_connected():
        raise NotATree(f"expected a tree on at least 2 vertices, got n={t.n}, m={t.m}")
    colors = [0] * t.n
    counts = [Counter() for _ in range(t.n)]
    colors[0] = 1
    queue = deque([0])
    trace = []
    while queue:
        w = queue.popleft()
        for u in t.adj[w]:
            if colors[u]:
                continue
            banned = {colors[w], lone_unique(counts[w])}
            colors[u] = min(c for c in (1, 2, 3) if c not in banned)
            counts[w][colors[u]] += 1
            counts[u][colors[w]] += 1
            trace.append(f"leaf {u} at {w}: forbid {sorted(c for c in banned if c)}")
            queue.append(u)
    return finish(t, colors, 2 if t.n == 2 else 3, trace, "color_tree")


def cycle_pattern(n: int) -> list[int]:
    """``(1,2,3)^a (1,2,3,4)^b`` with ``n = 3a + 4b`` and ``b`` minimal; ``C5`` gets 1..5."""
    if n < 3:
        raise InvalidSpec(f"cycle needs n >= 3, got {n}")
    if n == 5:
        return [1, 2, 3, 4, 5]
    b = n % 3
    a = (n - 4 * b) // 3
    return [1, 2, 3] * a + [1, 2, 3, 4] * b


def color_cycle(n: int) -> ConstructionOutcome:
    colors = cycle_pattern(n)
    g = generate(Cycle(n))
    bound = 3 if n % 3 == 0 else 5 if n == 5 else 4
    return finish(g, colors, bound, [f"cycle n={n}: pattern with {bound} colors"], "color_cycle")


def color_hypercube(d: int) -> ConstructionOutcome:
    """Parity colors ``{1,2}`` on the half with top bit 0 and ``{3,4}`` on the other half."""
    if d < 2:
        raise InvalidSpec(f"hypercube coloring needs d >= 2, got {d}")
    n = 1 << d
    top = d - 1
    colors = [1 + (v.bit_count() & 1) + 2 * (v >> top & 1) for v in range(n)]
    g = generate(Hypercube(d))
    return finish(g, colors, 4, [f"Q_{d} split along bit {top}"], "color_hypercube")


_PATH_TABLE = {
    (5, 1): (1, 2, 4, 3, 1),
    (6, 1): (1, 2, 4, 3, 2, 1),
    (7, 1): (1, 2, 3, 4, 2, 3, 1),
    (5, 2): (1, 2, 4, 3, 2),
    (6, 2): (1, 2, 4, 3, 1, 2),
    (7, 2): (1, 2, 3, 4, 1, 3, 2),
}


def _normalized_path(n: int, last: int) -> list[int]:
    # First vertex colored 1, last colored ``last`` in {1, 2}.
    if n <= 7:
        return list(_PATH_TABLE[(n, last)])
    rest = _normalized_path(n - 3, last)
    return [1, 3, 4, 1, *rest[1:]]


def color_path_endpoints(n: int, c1: int, cn: int) -> Coloring:
    """PCF 4-coloring of ``P_n`` with prescribed end colors in ``{1,2,3}``.

    The second and the second-to-last vertex also get colors from ``{1,2,3}``.
    """
    if n < 5:
        raise TooShort(f"path needs at least 5 vertices, got {n}")
    if c1 not in (1, 2, 3) or cn not in (1, 2, 3):
        raise BadColor(f"end colors must lie in {{1,2,3}}, got {c1}, {cn}")
    # Rename 1,2,3 so that c1 -> 1 and cn -> 1 or 2; color 4 is fixed.
    back = {1: c1}
    if cn != c1:
        back[2] = cn
    spare = [c for c in (1, 2, 3) if c not in back.values()]
    for c in (2, 3):
        if c not in back:
            back[c] = spare.pop(0)
    back[4] = 4
    colors = _normalized_path(n, 1 if cn == c1 else 2)
    return Coloring(tuple(back[c] for c in colors), 4)


# SK_n tables, keyed by 1-based (i, j) of the subdivided edge v_i v_j.
_SK4 = {(1, 2): 4, (1, 3): 2, (1, 4): 3, (2, 3): 1, (2, 4): 1, (3, 4): 2}
_SK5 = {
    (1, 2): 3, (2, 3): 4, (3, 4): 5, (4, 5): 1, (1, 5): 2,
    (1, 3): 4, (1, 4): 5, (2, 4): 5, (2, 5): 1, (3, 5): 1,
}  # fmt: skip


def skn_table(n: int) -> dict[tuple[int, int], int]:
    """Colors of the subdividing vertices ``u_ij`` (1-based, ``i < j``); ``v_i`` gets ``i``."""
    if n < 3:
        raise InvalidSpec(f"SK_n needs n >= 3, got {n}")
    if n == 3:
        return {(1, 2): 3, (1, 3): 2, (2, 3): 1}
    if n == 4:
        return dict(_SK4)
    if n == 5:
        return dict(_SK5)
    table = {(1, 2): n}
    for j in range(2, n // 2 + 1):
        table[(2 * j - 1, 2 * j)] = 1
    reserved = {1, n}
    if n % 2:
        table[(1, n)] = 2
        reserved.add(2)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if (i, j) not in table:
                table[(i, j)] = min(c for c in range(1, n + 1) if c not in reserved | {i, j})
    return table


def color_skn(n: int) -> ConstructionOutcome:
    table = skn_table(n)
    g, chains = subdivide(generate(Complete(n)), 1)
    colors = [0] * g.n
    for v in range(n):
        colors[v] = v + 1
    for (i, j), (w,) in chains.items():
        colors[w] = table[(i + 1, j + 1)]
    if n <= 5:
        trace = [f"SK_{n}: explicit table"]
    else:
        trace = [f"SK_{n}: {'even' if n % 2 == 0 else 'odd'} matching case"]
    return finish(g, colors, n, trace, "color_skn")


def color_corona(gbase: Graph, proper: Sequence[int] | Coloring) -> ConstructionOutcome:
    """Corona of ``gbase`` (leaf of ``v`` is ``n + v``).

    With ``chi`` the palette of ``proper``, each leaf first tries a color
    missing from ``N[v]``, then a color of ``N(v)`` that leaves another color
    unique there; if some vertex admits neither, every leaf gets ``chi + 1``.
    """
    base = _require(gbase, proper, Variant.PROPER, BadBase, "base coloring")
    n = gbase.n
    chi = max(base, default=0)
    g = build_graph(2 * n, list(gbase.edge_list) + [(v, n + v) for v in range(n)])
    leaf = []
    for v in range(n):
        counts = Counter(base[w] for w in gbase.adj[v])
        missing = [c for c in range(1, chi + 1) if c != base[v] and c not in counts]
        if missing:
            leaf.append(missing[0])
            continue
        singles = [c for c, x in counts.items() if x == 1]
        others = sorted(c for c in counts if singles and c != singles[0])
        if others:
            leaf.append(others[0])
            continue
        break
    if len(leaf) == n:
        trace = [f"palette chi={chi} suffices"]
        return finish(g, base + leaf, chi, trace, "color_corona")
    trace = [f"vertex {len(leaf)} sees every color at least twice; leaves get {chi + 1}"]
    return finish(g, base + [chi + 1] * n, chi + 1, trace, "color_corona")


def color_via_total_domination(
    g: Graph, D: Iterable[int], proper: Sequence[int] | Coloring
) -> ConstructionOutcome:
    base = _require(g, proper, Variant.PROPER, BadBase, "base coloring")
    dom = sorted(set(D))
    if not dom or not is_total_dominating(g, dom):
        raise BadDominatingSet(f"{dom} does not totally dominate the graph")
    chi = max(base, default=0)
    colors = list(base)
    for i, d in enumerate(dom):
        colors[d] = chi + 1 + i
    return finish(g, colors, len(dom) + chi, [f"|D|={len(dom)} fresh colors over chi={chi}"], "total domination")


def product_coloring(
    g: Graph, f: Sequence[int] | Coloring, p: Sequence[int] | Coloring
) -> ConstructionOutcome:
    """Pair ``(f(v), p(v))`` flattened to ``(f(v) - 1) * k_p + p(v)``."""
    cf = _require(g, f, Variant.CF, BadBase, "conflict-free coloring")
    pr = _require(g, p, Variant.PROPER, BadBase, "proper coloring")
    kf, kp = max(cf, default=1), max(pr, default=1)
    colors = [(a - 1) * kp + b for a, b in zip(cf, pr)]
    return finish(g, colors, kf * kp, [f"pairs over {kf} x {kp} colors"], "product_coloring")
