"""Elimination certificates for (a,b)-degeneracy and h-edge degeneracy.

A stall is a proof of failure: the residual induced subgraph has neither a
vertex of degree <= 1 nor a qualifying edge. A successful run yields an
elimination order, which is what the colorers consume. Success does not
imply that every induced subgraph has a qualifying edge; removing an edge
can lower degrees elsewhere and open a path the hereditary check lacks.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..graph import Graph


@dataclass(frozen=True)
class RemoveLowVertex:
    u: int
    degree: int


@dataclass(frozen=True)
class RemoveEdgePair:
    v: int
    w: int
    deg_v: int
    deg_w: int


Step = RemoveLowVertex | RemoveEdgePair


@dataclass
class EliminationCertificate:
    """Removal steps; ``residual`` is empty exactly when elimination succeeded.

    ``mode`` is ``"ab"`` with ``params == (a, b)`` or ``"h"`` with ``params == (h,)``.
    """

    mode: str
    params: tuple[int, ...]
    steps: list[Step] = field(default_factory=list)
    residual: frozenset[int] = frozenset()

    def __bool__(self) -> bool:
        return not self.residual

    @property
    def bound(self) -> int:
        """Palette size guaranteed for PCF colorings of certified graphs."""
        if self.mode == "ab":
            a, b = self.params
            return max(5, a // 2 + 2 * b - 1)
        (h,) = self.params
        return max(5, 2 * (h - 2))

    def edge_ok(self, dv: int, dw: int) -> bool:
        if self.mode == "ab":
            a, b = self.params
            return dv <= a and dw <= b
        return dv + dw <= self.params[0]


def _eliminate(g: Graph, cert: EliminationCertificate) -> EliminationCertificate:
    deg = list(g.degrees)
    alive = [True] * g.n
    remaining = g.n

    def drop(x: int) -> None:
        alive[x] = False
        for y in g.adj[x]:
            if alive[y]:
                deg[y] -= 1

    while remaining:
        low = next((u for u in range(g.n) if alive[u] and deg[u] <= 1), None)
        if low is not None:
            cert.steps.append(RemoveLowVertex(low, deg[low]))
            drop(low)
            remaining -= 1
            continue
        pair = None
        for x in range(g.n):
            if not alive[x]:
                continue
            for y in g.adj[x]:
                if y > x and alive[y]:
                    if cert.edge_ok(deg[x], deg[y]):
                        pair = (x, y)
                    elif cert.edge_ok(deg[y], deg[x]):
                        pair = (y, x)
                    if pair:
                        break
            if pair:
                break
        if pair is None:
            cert.residual = frozenset(u for u in range(g.n) if alive[u])
            return cert
        v, w = pair
        cert.steps.append(RemoveEdgePair(v, w, deg[v], deg[w]))
        drop(v)
        drop(w)
        remaining -= 2
    return cert


def ab_certificate(g: Graph, a: int, b: int) -> EliminationCertificate:
    """Greedy (a,b)-elimination: low vertices first, then the lowest-index edge."""
    if not 2 <= a <= b:
        raise ValueError(f"need 2 <= a <= b, got a={a}, b={b}")
    return _eliminate(g, EliminationCertificate("ab", (a, b)))


def h_edge_certificate(g: Graph, h: int) -> EliminationCertificate:
    if h < 4:
        raise ValueError(f"need h >= 4, got {h}")
    return _eliminate(g, EliminationCertificate("h", (h,)))


def replay(g: Graph, cert: EliminationCertificate) -> bool:
    """Re-validate every step against the residual graph it was taken in."""
    if not cert:
        return False
    deg = list(g.degrees)
    alive = [True] * g.n

    def drop(x: int) -> None:
        alive[x] = False
        for y in g.adj[x]:
            if alive[y]:
                deg[y] -= 1

    for step in cert.steps:
        if isinstance(step, RemoveLowVertex):
            if not alive[step.u] or deg[step.u] > 1 or deg[step.u] != step.degree:
                return False
            drop(step.u)
        else:
            v, w = step.v, step.w
            if not (alive[v] and alive[w] and g.has_edge(v, w)):
                return False
            if (deg[v], deg[w]) != (step.deg_v, step.deg_w) or not cert.edge_ok(deg[v], deg[w]):
                return False
            drop(v)
            drop(w)
    return not any(alive)
