"""Colorings under maximum-average-degree and girth hypotheses.

The inductive arguments are replayed literally: remove a reducible
configuration, color what remains recursively, then put the configuration
back. Removed sets are colored either by the explicit rules of the argument
(4-thread lists, C5 block extension) or by exhaustive local extension.
"""

from __future__ import annotations

import sys
from collections import Counter
from collections.abc import Callable, Iterable
from contextlib import contextmanager
from enum import Enum
from fractions import Fraction
from itertools import permutations, product

from ..errors import (
    HypothesisViolated,
    InternalContradiction,
    NotConnected,
    NotFPlusPendant,
    NotOuterplanarEvidence,
)
from ..exact.solver import decide_k
from ..graph import Graph, girth
from ..structure.blocks import blocks, is_in_F
from ..structure.certificates import ab_certificate
from ..structure.density import mad
from ..structure.threads import find_thread
from ..verify import Coloring, Variant
from .basic import cycle_pattern
from .degenerate import color_ab
from .outcome import ConstructionOutcome, FMembership, finish, reproducer
from .peel import extend_or_fail, peel_leaves, reinsert

PALETTE4 = (1, 2, 3, 4)


class Regime(Enum):
    MAD83 = "mad83"
    MAD52 = "mad52"
    MAD2411 = "mad2411"

    @property
    def threshold(self) -> Fraction:
        return {"mad83": Fraction(8, 3), "mad52": Fraction(5, 2), "mad2411": Fraction(24, 11)}[self.value]

    @property
    def bound(self) -> int:
        return {"mad83": 6, "mad52": 5, "mad2411": 4}[self.value]

    @classmethod
    def parse(cls, value: Regime | str) -> Regime:
        if isinstance(value, Regime):
            return value
        key = str(value).lower().replace("/", "").replace("_", "")
        for r in cls:
            if r.value == key or r.name.lower() == key:
                return r
        raise ValueError(f"unknown regime {value!r}")


@contextmanager
def _deep_recursion(limit: int):
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, limit))
    try:
        yield
    finally:
        sys.setrecursionlimit(old)


def _sub(g: Graph, vertices: Iterable[int], solve: Callable[[Graph], list[int]]) -> dict[int, int]:
    """Color the induced subgraph on ``vertices`` and map back to ``g``'s labels."""
    h, labels = g.induced(vertices)
    return dict(zip(labels, solve(h)))


def _relabel_colors(part: dict[int, int], fixed: dict[int, int]) -> dict[int, int]:
    """Permute the palette of ``part`` so that vertex ``v`` gets ``fixed[v]``."""
    perm: dict[int, int] = {}
    for v, target in fixed.items():
        perm[part[v]] = target
    spare = [c for c in PALETTE4 if c not in perm.values()]
    for c in PALETTE4:
        if c not in perm:
            perm[c] = spare.pop(0)
    return {v: perm[c] for v, c in part.items()}


def _unique_in(g: Graph, colors: list[int] | dict[int, int], v: int, skip=()) -> list[int]:
    """Neighbors of ``v`` whose (assigned) color occurs once in its neighborhood."""
    get = colors.get if isinstance(colors, dict) else (lambda x: colors[x])
    nbrs = [w for w in g.adj[v] if w not in skip and get(w)]
    counts = Counter(get(w) for w in nbrs)
    return [w for w in nbrs if counts[get(w)] == 1]


# ---------------------------------------------------------------- F + pendant


def _cycle_order(g: Graph, block: tuple[int, ...], start: int) -> list[int]:
    inside = set(block)
    order, prev = [start], -1
    cur = start
    while len(order) < len(block):
        nxt = min(w for w in g.adj[cur] if w in inside and w != prev and w not in order)
        order.append(nxt)
        prev, cur = cur, nxt
    return order


def _attach_c5(g: Graph, colors: list[int], ring: list[int], what: str) -> None:
    """End-block rule: ``w1`` colored; give ``w2..w5`` the colors gamma, delta, beta, gamma."""
    w1 = ring[0]
    alpha = colors[w1]
    uniq = _unique_in(g, colors, w1)
    if not uniq:
        raise InternalContradiction(f"{what}: cut vertex {w1} has no unique color", reproducer(g, colors, what))
    beta = min(colors[w] for w in uniq)
    gamma, delta = (c for c in PALETTE4 if c not in (alpha, beta))
    for w, c in zip(ring[1:], (gamma, delta, beta, gamma)):
        colors[w] = c


def _grow_blocks(g: Graph, colors: list[int], todo: list[tuple[int, ...]], what: str) -> int:
    """Attach the C5 blocks of ``todo`` one at a time, each at its single colored vertex."""
    done = 0
    todo = list(todo)
    while todo:
        for i, b in enumerate(todo):
            hooks = [v for v in b if colors[v]]
            if len(hooks) == 1:
                break
        else:
            raise InternalContradiction(f"{what}: no block hangs off the colored part", reproducer(g, colors, what))
        _attach_c5(g, colors, _cycle_order(g, todo.pop(i), hooks[0]), what)
        done += 1
    return done


def _f_pendant_colors(h: Graph) -> list[int]:
    if not h.is_connected():
        raise NotFPlusPendant("graph is not connected")
    leaves = [v for v in range(h.n) if h.degree(v) == 1]
    if len(leaves) != 1:
        raise NotFPlusPendant(f"expected exactly one vertex of degree 1, found {len(leaves)}")
    u = leaves[0]
    rest, labels = h.without([u])
    if not is_in_F(rest):
        raise NotFPlusPendant("removing the pendant vertex does not leave a C5-block graph")
    a = h.adj[u][0]
    bd = blocks(rest)
    all_blocks = [tuple(labels[x] for x in b) for b in bd.blocks]
    base = next(b for b in all_blocks if a in b)
    colors = [0] * h.n
    ring = _cycle_order(h, base, a)
    colors[u] = 1
    for w, c in zip(ring, (2, 3, 1, 4, 3)):
        colors[w] = c
    _grow_blocks(h, colors, [b for b in all_blocks if b != base], "color_f_pendant")
    return colors


def color_f_pendant(h: Graph) -> Coloring:
    """PCF 4-coloring of a C5-block graph with one pendant edge attached."""
    colors = _f_pendant_colors(h)
    return finish(h, colors, 4, ["base block at the pendant", "blocks added outward"], "color_f_pendant").coloring


# ------------------------------------------------------------ 4-thread recursion


class _FourColorer:
    """Recursive 4-coloring for graphs with a 4-thread in every leafless subgraph."""

    def __init__(self, outerplanar: bool) -> None:
        self.outerplanar = outerplanar
        self.trace: Counter[str] = Counter()

    def color(self, g: Graph) -> list[int]:
        if g.n <= 2:
            return [1, 2][: g.n]
        order, special = self._peel(g)
        alive = sorted(set(range(g.n)) - set(order))
        colors = [0] * g.n
        if special:
            self.trace["leaf whose removal leaves a C5-block graph: explicit block coloring"] += 1
            part = _sub(g, alive, _f_pendant_colors)
        else:
            part = _sub(g, alive, self._core)
        for v, c in part.items():
            colors[v] = c
        if order:
            self.trace["vertex of degree 1 re-added"] += len(order)
        reinsert(g, colors, order, 4, "degree-1 vertex")
        return colors

    def _peel(self, g: Graph) -> tuple[list[int], bool]:
        """Peel 1-vertices; stop early if the next peel would leave a member of F."""
        deg = list(g.degrees)
        alive = [True] * g.n
        n_cur, m_cur = g.n, g.m
        order: list[int] = []
        stack = [v for v in range(g.n) if deg[v] == 1]
        while stack and n_cur > 1:
            u = stack.pop()
            if not alive[u] or deg[u] != 1:
                continue
            n2, m2 = n_cur - 1, m_cur - 1
            if not self.outerplanar and n2 % 4 == 1 and n2 > 1 and 4 * m2 == 5 * (n2 - 1):
                rest, _ = g.induced([v for v in range(g.n) if alive[v] and v != u])
                if is_in_F(rest):
                    return order, True
            alive[u] = False
            order.append(u)
            n_cur, m_cur = n2, m2
            for w in g.adj[u]:
                if alive[w]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        stack.append(w)
        return order, False

    def _core(self, c: Graph) -> list[int]:
        if c.n == 1:
            return [1]
        if c.n == 2:
            return [1, 2]
        if all(d == 2 for d in c.degrees):
            if c.n == 5:
                raise InternalContradiction("C5 reached the 4-coloring recursion", reproducer(c, [0] * 5, "cycle"))
            self.trace["cycle colored by the periodic pattern"] += 1
            ring = _cycle_order(c, tuple(range(c.n)), 0)
            colors = [0] * c.n
            for v, col in zip(ring, cycle_pattern(c.n)):
                colors[v] = col
            return colors
        t = find_thread(c, 4)
        if t is None:
            if self.outerplanar:
                raise NotOuterplanarEvidence("a leafless subgraph that is not a cycle has no 4-thread")
            raise InternalContradiction("no 4-thread in a leafless subgraph", reproducer(c, [0] * c.n, "4-thread"))
        v0, v5 = t.endpoints
        inner = list(t.internal)
        rest = [x for x in range(c.n) if x not in set(inner)]
        gp, labels = c.induced(rest)
        comps = [[labels[x] for x in comp] for comp in gp.components()]
        in_f = [len(comp) >= 5 and is_in_F(c.induced(comp)[0]) for comp in comps]
        if any(in_f):
            return self._thread_beside_f(c, v0, inner, v5, comps)
        self.trace["4-thread removed, lists extended"] += 1
        colors = [0] * c.n
        for comp in comps:
            for v, col in _sub(c, comp, self.color).items():
                colors[v] = col
        self._extend_thread(c, colors, v0, inner, v5)
        return colors

    def _extend_thread(self, c: Graph, colors: list[int], v0: int, inner: list[int], v5: int) -> None:
        v1, v2, v3, v4 = inner
        left = _unique_in(c, colors, v0)
        right = _unique_in(c, colors, v5) if v5 != v0 else left
        if not left or not right:
            raise InternalContradiction("thread end without a unique color", reproducer(c, colors, "4-thread"))
        vm1, v6 = left[0], right[0]
        a0, a5 = colors[v0], colors[v5]
        L1 = [x for x in PALETTE4 if x not in (colors[vm1], a0)]
        L2 = [x for x in PALETTE4 if x != a0]
        L3 = [x for x in PALETTE4 if x != a5]
        L4 = [x for x in PALETTE4 if x not in (a5, colors[v6])]
        common = [x for x in L1 if x in L4]
        if common:
            x = common[0]
            c2 = next(y for y in L2 if y != x)
            c3 = next(y for y in L3 if y not in (x, c2))
            assign = (x, c2, c3, x)
            self.trace["4-thread: ends share a color"] += 1
        else:
            assign = (a5, colors[v6], colors[vm1], a0)
            self.trace["4-thread: disjoint end lists"] += 1
        for v, col in zip(inner, assign):
            colors[v] = col

    def _thread_beside_f(self, c: Graph, v0: int, inner: list[int], v5: int, comps: list[list[int]]) -> list[int]:
        if v0 == v5:
            raise InternalContradiction("closed 4-thread around a C5-block component", reproducer(c, [0] * c.n, "thread beside F"))
        colors = [0] * c.n
        if len(comps) == 2:
            self.trace["4-thread splits off a C5-block component: two sides"] += 1
            h = next(comp for comp in comps if v0 in comp)
            k = next(comp for comp in comps if v5 in comp)
            side_h = _relabel_colors(_sub(c, h + [inner[0]], self.color), {inner[0]: 1, v0: 2})
            side_k = _relabel_colors(_sub(c, k + [inner[3]], self.color), {inner[3]: 1, v5: 2})
            for v, col in {**side_h, **side_k}.items():
                colors[v] = col
            colors[inner[1]], colors[inner[2]] = 3, 4
            return colors
        (h,) = comps
        hg, hl = c.induced(h)
        cuts = {hl[x] for x in blocks(hg).cut_vertices}
        if v5 in cuts and v0 not in cuts:
            v0, v5, inner = v5, v0, inner[::-1]
        v1, v2, v3, v4 = inner
        if v5 not in cuts:
            self.trace["4-thread next to a C5-block component: lists on v2..v4"] += 1
            for v, col in _relabel_colors(_sub(c, h + [v1], self.color), {v1: 1, v0: 2}).items():
                colors[v] = col
            a5 = colors[v5]
            lists = ((3, 4), [x for x in (2, 3, 4) if x != a5], [x for x in PALETTE4 if x != a5])
            for pick in product(*lists):
                if len(set(pick)) == 3:
                    colors[v2], colors[v3], colors[v4] = pick
                    return colors
            raise InternalContradiction("empty list system on the thread", reproducer(c, colors, "thread beside F"))
        self.trace["4-thread between cut vertices: lobe re-added block by block"] += 1
        lobe_g, lobe_l = c.induced([x for x in h if x != v0])
        lobe = next(
            [lobe_l[x] for x in comp] for comp in lobe_g.components() if v5 not in {lobe_l[x] for x in comp}
        )
        keep = [x for x in range(c.n) if x not in set(lobe)]
        for v, col in _sub(c, keep, self.color).items():
            colors[v] = col
        lg, ll = c.induced(lobe + [v0])
        lobe_blocks = [tuple(ll[x] for x in b) for b in blocks(lg).blocks]
        _grow_blocks(c, colors, lobe_blocks, "lobe")
        return colors


def _summarize(trace: Counter) -> list[str]:
    return [f"{what} (x{n})" if n > 1 else what for what, n in trace.items()]


# ------------------------------------------------------------ five colors


class _FiveColorer:
    def __init__(self) -> None:
        self.trace: Counter[str] = Counter()

    def color(self, g: Graph) -> list[int]:
        if g.n <= 6:
            base = decide_k(g, Variant.PCF, 5)
            if base is None:
                raise InternalContradiction("small graph without a PCF 5-coloring", reproducer(g, [0] * g.n, "base"))
            self.trace["base solved exactly"] += 1
            return list(base.colors)
        keep, order = peel_leaves(g)
        colors = [0] * g.n
        if order:
            for v, c in _sub(g, keep, self.color).items():
                colors[v] = c
            self.trace["vertex of degree 1 re-added"] += len(order)
            reinsert(g, colors, order, 5, "degree-1 vertex")
            return colors
        if all(d == 2 for d in g.degrees):
            self.trace["cycle colored by the periodic pattern"] += 1
            for v, c in zip(_cycle_order(g, tuple(range(g.n)), 0), cycle_pattern(g.n)):
                colors[v] = c
            return colors
        S, case = self._configuration(g)
        self.trace[case] += 1
        rest = [x for x in range(g.n) if x not in set(S)]
        gp, labels = g.induced(rest)
        for comp in gp.components():
            for v, c in _sub(g, [labels[x] for x in comp], self.color).items():
                colors[v] = c
        extend_or_fail(g, colors, S, 5, case)
        return colors

    @staticmethod
    def _configuration(g: Graph) -> tuple[list[int], str]:
        deg = g.degrees
        for v in range(g.n):
            if deg[v] == 2:
                for w in g.adj[v]:
                    if deg[w] == 2:
                        return [v, w], "case 1: adjacent 2-vertices"
        best = None
        for v in range(g.n):
            if deg[v] != 3 or any(deg[w] != 2 for w in g.adj[v]):
                continue
            far = [next(y for y in g.adj[w] if y != v) for w in g.adj[v]]
            if any(deg[y] == 3 for y in far):
                return [v, *g.adj[v]], "case 2: 3-vertex with three 2-neighbors"
            best = best or [v, *g.adj[v]]
        if best is not None:
            return best, "case 2: 3-vertex with three 2-neighbors"
        raise InternalContradiction(
            "neither adjacent 2-vertices nor a 3-vertex with three 2-neighbors", reproducer(g, [0] * g.n, "mad52")
        )


# ------------------------------------------------------------ entry points


def color_sparse(g: Graph, regime: Regime | str) -> ConstructionOutcome | FMembership:
    """Color a connected graph whose maximum average degree is below the regime threshold."""
    regime = Regime.parse(regime)
    if not g.is_connected():
        raise NotConnected("color_sparse needs a connected graph")
    m = mad(g)
    if m >= regime.threshold:
        raise HypothesisViolated("mad", f"mad = {m} is not below {regime.threshold}")
    with _deep_recursion(10 * g.n + 1000):
        if regime is Regime.MAD83:
            cert = ab_certificate(g, 2, 3)
            if not cert:
                raise InternalContradiction(
                    "mad < 8/3 but no (2,3)-elimination exists", reproducer(g, [0] * g.n, "certificate")
                )
            out = color_ab(g, cert)
            out.trace.insert(0, "(2,3)-elimination certificate")
            return out
        if regime is Regime.MAD52:
            five = _FiveColorer()
            colors = five.color(g)
            return finish(g, colors, 5, _summarize(five.trace), "color_sparse mad52")
        if g.n >= 5 and is_in_F(g):
            return FMembership(g, len(blocks(g).blocks))
        four = _FourColorer(outerplanar=False)
        colors = four.color(g)
        return finish(g, colors, 4, _summarize(four.trace), "color_sparse mad2411")


def color_outerplanar6(g: Graph) -> ConstructionOutcome:
    """4-coloring of an outerplanar graph of girth at least 6 (outerplanarity is the caller's claim)."""
    if not g.is_connected():
        raise NotConnected("color_outerplanar6 needs a connected graph")
    gi = girth(g)
    if gi < 6:
        raise HypothesisViolated("girth", f"girth {gi} < 6")
    four = _FourColorer(outerplanar=True)
    with _deep_recursion(10 * g.n + 1000):
        colors = four.color(g)
    return finish(g, colors, 4, _summarize(four.trace), "color_outerplanar6")


def color_planar(g: Graph) -> ConstructionOutcome | FMembership:
    """Dispatch by girth for a graph the caller asserts is planar."""
    gi = girth(g)
    if gi >= 24:
        return color_sparse(g, Regime.MAD2411)
    if gi >= 10:
        return color_sparse(g, Regime.MAD52)
    if gi >= 7:
        cert = ab_certificate(g, 2, 3)
        if not cert:
            raise HypothesisViolated("planar", "girth >= 7 but no (2,3)-elimination; the graph is not planar")
        out = color_ab(g, cert)
        out.trace.insert(0, "girth >= 7: (2,3)-elimination certificate")
        return out
    raise HypothesisViolated("girth", f"girth {gi} < 7")
