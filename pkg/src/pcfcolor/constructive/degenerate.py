"""Colorers driven by vertex/pair elimination: (a,b)- and h-edge degenerate
graphs, claw-free graphs and chordal graphs."""

from __future__ import annotations

from collections import Counter

from ..errors import HypothesisViolated, InternalContradiction, NotChordal, NotClawFree
from ..exact.solver import decide_k
from ..graph import Graph
from ..structure.certificates import EliminationCertificate, RemoveLowVertex, replay
from ..structure.classes import find_claw, lexbfs_peo
from ..verify import Variant
from .basic import lone_unique
from .outcome import ConstructionOutcome, finish, reproducer
from .peel import extend_or_fail

BASE_SIZE = 6


def _has_unique(g: Graph, colors: list[int], x: int, skip: int) -> bool:
    counts = Counter(colors[w] for w in g.adj[x] if w != skip and colors[w])
    return 1 in counts.values()


def _pair_case(g: Graph, colors: list[int], v: int, w: int, symmetric: bool) -> int:
    # Which uniqueness pattern of N'(v), N'(w) the step falls in; the claw-free
    # argument merges the two one-sided patterns.
    uv, uw = _has_unique(g, colors, v, w), _has_unique(g, colors, w, v)
    if symmetric:
        return 1 if uv and uw else 2 if uv or uw else 3
    return {(True, True): 1, (True, False): 2, (False, True): 3, (False, False): 4}[(uv, uw)]


def _solve_base(g: Graph, alive: list[int], k: int, colors: list[int], what: str) -> None:
    sub, labels = g.induced(alive)
    base = decide_k(sub, Variant.PCF, k)
    if base is None:
        raise InternalContradiction(
            f"{what}: base graph on {sub.n} vertices has no PCF {k}-coloring",
            reproducer(g, colors, f"{what} base"),
        )
    for v, c in zip(labels, base.colors):
        colors[v] = c


def _run_steps(
    g: Graph, steps: list[tuple[int, ...]], k: int, labels: list[str], what: str, symmetric: bool = False
) -> tuple[list[int], list[str]]:
    """Solve what is left once at most ``BASE_SIZE`` vertices remain, then undo
    the removal ``steps`` in reverse with exhaustive local extension."""
    removed = 0
    cut = len(steps)
    for i, step in enumerate(steps):
        if g.n - removed <= BASE_SIZE:
            cut = i
            break
        removed += len(step)
    gone = {v for step in steps[:cut] for v in step}
    colors = [0] * g.n
    trace = [f"base: {g.n - len(gone)} vertices solved exactly with {k} colors"]
    _solve_base(g, [v for v in range(g.n) if v not in gone], k, colors, what)
    for i in range(cut - 1, -1, -1):
        step = steps[i]
        if len(step) == 2:
            case = _pair_case(g, colors, *step, symmetric)
            trace.append(f"{labels[i]} {step}: case {case}")
        else:
            trace.append(f"{labels[i]} {step}")
        extend_or_fail(g, colors, list(step), k, f"{what} step {i}")
    return colors, trace


def color_ab(g: Graph, cert: EliminationCertificate) -> ConstructionOutcome:
    """Reverse the certificate; palette ``max{5, a//2 + 2b - 1}`` (or ``max{5, 2(h-2)}``)."""
    if not replay(g, cert):
        raise HypothesisViolated("certificate", "the certificate does not replay on this graph")
    steps: list[tuple[int, ...]] = []
    labels = []
    for s in cert.steps:
        if isinstance(s, RemoveLowVertex):
            steps.append((s.u,))
            labels.append("low vertex")
        else:
            steps.append((s.v, s.w))
            labels.append(f"pair deg ({s.deg_v},{s.deg_w})")
    k = cert.bound
    colors, trace = _run_steps(g, steps, k, labels, "color_ab")
    return finish(g, colors, k, trace, "color_ab")


def color_clawfree(g: Graph) -> ConstructionOutcome:
    """Remove adjacent pairs down to a small base, then re-add them with ``2*Delta + 1`` colors."""
    claw = find_claw(g)
    if claw is not None:
        raise NotClawFree(claw)
    k = 2 * g.max_degree + 1
    alive = [True] * g.n
    steps: list[tuple[int, ...]] = []
    remaining = g.n
    while remaining > BASE_SIZE:
        pair = next(
            ((u, v) for u in range(g.n) if alive[u] for v in g.adj[u] if v > u and alive[v]), None
        )
        if pair is None:
            break
        steps.append(pair)
        alive[pair[0]] = alive[pair[1]] = False
        remaining -= 2
    colors, trace = _run_steps(g, steps, k, ["pair"] * len(steps), "color_clawfree", True)
    return finish(g, colors, k, trace, "color_clawfree")


def color_chordal(g: Graph) -> ConstructionOutcome:
    """Greedy along the reverse of a perfect elimination order."""
    peo = lexbfs_peo(g)
    if peo is None:
        raise NotChordal("no perfect elimination order exists")
    k = 2 * g.max_degree + 1
    colors = [0] * g.n
    counts = [Counter() for _ in range(g.n)]
    for v in reversed(peo):
        clique = [w for w in g.adj[v] if colors[w]]
        banned = {colors[w] for w in clique}
        banned.update(u for w in clique if (u := lone_unique(counts[w])) is not None)
        colors[v] = min(c for c in range(1, k + 1) if c not in banned)
        for w in clique:
            counts[w][colors[v]] += 1
            counts[v][colors[w]] += 1
    trace = [f"reverse elimination order, palette {k}"]
    return finish(g, colors, k, trace, "color_chordal")
