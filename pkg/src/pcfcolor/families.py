"""Named graph families.

Numbering conventions (so colorings in tests and docs are reproducible):

* ``path``/``cycle``: ``0 - 1 - ... - (n-1)`` (closed for a cycle).
* ``kbip(a, b)``: sides ``0..a-1`` and ``a..a+b-1``.
* ``hypercube(d)``: vertex = integer value of its bitstring.
* ``star(n)``: ``K_{1,n}`` with center ``0``.
* ``csub``/``ksub``: base vertices keep their labels, subdividing vertices
  follow edge by edge (see :func:`pcfcolor.graph.subdivide`).
* ``corona``: base vertex ``v`` gets the leaf ``n + v``.
* ``fchain(t)``: block ``i`` is the 5-cycle ``4i, 4i+1, 4i+2, 4i+3, 4i+4``.
* ``bouquet(t, k)``: common vertex ``0``; copy ``j`` is the path on the next
  ``3k+1`` labels, both ends joined to ``0``.
* ``product``: see :func:`pcfcolor.graph.cartesian_product`.
* ``kite``: ``K4`` minus the edge ``{0, 2}``.
* ``chordal_remark``: the cycle ``0..4`` plus the chords ``0-2`` and ``0-3``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Union

from .errors import InvalidSpec
from .graph import Graph, build_graph, cartesian_product, subdivide

Base = Union["FamilySpec", Graph]


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    args: tuple[int, ...] = ()
    base: Base | None = None
    other: Base | None = None

    def __str__(self) -> str:
        parts = [self.kind]
        if self.args:
            parts.append(",".join(map(str, self.args)))
        if isinstance(self.base, FamilySpec):
            parts.append(str(self.base))
        text = ":".join(parts)
        if isinstance(self.other, FamilySpec):
            text += "*" + str(self.other)
        return text


def Path(n: int) -> FamilySpec:
    return FamilySpec("path", (n,))


def Cycle(n: int) -> FamilySpec:
    return FamilySpec("cycle", (n,))


def Complete(n: int) -> FamilySpec:
    return FamilySpec("complete", (n,))


def CompleteBipartite(a: int, b: int) -> FamilySpec:
    return FamilySpec("kbip", (a, b))


def Hypercube(d: int) -> FamilySpec:
    return FamilySpec("hypercube", (d,))


def CompleteSubdivision(base: Base) -> FamilySpec:
    return FamilySpec("csub", (), base)


def KSubdivision(base: Base, k: int) -> FamilySpec:
    return FamilySpec("ksub", (k,), base)


def Corona(base: Base) -> FamilySpec:
    return FamilySpec("corona", (), base)


def Star(n: int) -> FamilySpec:
    return FamilySpec("star", (n,))


def RandomTree(n: int, seed: int = 0) -> FamilySpec:
    return FamilySpec("tree", (n, seed))


def FChain(t: int) -> FamilySpec:
    return FamilySpec("fchain", (t,))


def Bouquet(t: int, k: int) -> FamilySpec:
    return FamilySpec("bouquet", (t, k))


def CartesianProduct(a: Base, b: Base) -> FamilySpec:
    return FamilySpec("product", (), a, b)


KITE = FamilySpec("kite")
CHORDAL_REMARK = FamilySpec("chordal_remark")


def _need(cond: bool, spec: FamilySpec, why: str) -> None:
    if not cond:
        raise InvalidSpec(f"{spec}: {why}")


def _base(b: Base | None, spec: FamilySpec) -> Graph:
    _need(b is not None, spec, "missing base graph")
    return b if isinstance(b, Graph) else generate(b)


def prufer_tree(n: int, seed: int) -> Graph:
    """Uniform random labelled tree on ``n`` vertices from a seeded Pruefer code."""
    if n <= 1:
        return build_graph(n, [])
    if n == 2:
        return build_graph(2, [(0, 1)])
    rng = random.Random(seed)
    code = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in code:
        degree[x] += 1
    edges = []
    for x in code:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = (v for v in range(n) if degree[v] == 1)
    edges.append((u, w))
    return build_graph(n, edges)


def generate(spec: FamilySpec) -> Graph:
    kind, a = spec.kind, spec.args
    if kind == "path":
        _need(len(a) == 1 and a[0] >= 1, spec, "path needs n >= 1")
        return build_graph(a[0], [(i, i + 1) for i in range(a[0] - 1)])
    if kind == "cycle":
        _need(len(a) == 1 and a[0] >= 3, spec, "cycle needs n >= 3")
        n = a[0]
        return build_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "complete":
        _need(len(a) == 1 and a[0] >= 1, spec, "complete needs n >= 1")
        n = a[0]
        return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if kind == "kbip":
        _need(len(a) == 2 and min(a) >= 1, spec, "kbip needs a, b >= 1")
        p, q = a
        return build_graph(p + q, [(i, p + j) for i in range(p) for j in range(q)])
    if kind == "hypercube":
        _need(len(a) == 1 and a[0] >= 1, spec, "hypercube needs d >= 1")
        d = a[0]
        return build_graph(
            1 << d, [(v, v ^ (1 << i)) for v in range(1 << d) for i in range(d) if not v >> i & 1]
        )
    if kind == "csub":
        return subdivide(_base(spec.base, spec), 1)[0]
    if kind == "ksub":
        _need(len(a) == 1 and a[0] >= 0, spec, "ksub needs a count >= 0")
        return subdivide(_base(spec.base, spec), a[0])[0]
    if kind == "corona":
        g = _base(spec.base, spec)
        return build_graph(2 * g.n, list(g.edge_list) + [(v, g.n + v) for v in range(g.n)])
    if kind == "star":
        _need(len(a) == 1 and a[0] >= 1, spec, "star needs n >= 1")
        return build_graph(a[0] + 1, [(0, i) for i in range(1, a[0] + 1)])
    if kind == "tree":
        _need(len(a) in (1, 2) and a[0] >= 1, spec, "tree needs n >= 1")
        return prufer_tree(a[0], a[1] if len(a) == 2 else 0)
    if kind == "fchain":
        _need(len(a) == 1 and a[0] >= 1, spec, "fchain needs t >= 1")
        edges = []
        for i in range(a[0]):
            cyc = [4 * i + j for j in range(5)]
            edges += [(cyc[j], cyc[(j + 1) % 5]) for j in range(5)]
        return build_graph(4 * a[0] + 1, edges)
    if kind == "bouquet":
        _need(len(a) == 2 and a[0] >= 1 and a[1] >= 1, spec, "bouquet needs t, k >= 1")
        t, k = a
        length = 3 * k + 1
        edges = []
        for j in range(t):
            path = [0] + [1 + j * length + i for i in range(length)] + [0]
            edges += list(zip(path, path[1:]))
        return build_graph(t * length + 1, edges)
    if kind == "product":
        return cartesian_product(_base(spec.base, spec), _base(spec.other, spec))
    if kind == "kite":
        return build_graph(4, [(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)])
    if kind == "chordal_remark":
        return build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (0, 3)])
    raise InvalidSpec(f"unknown family {kind!r}")


_SIMPLE = {"path", "cycle", "complete", "kbip", "hypercube", "star", "tree", "fchain", "bouquet"}
_ALIASES = {"k": "complete", "c": "cycle", "p": "path", "q": "hypercube", "skn": "skn"}


def parse_family(text: str) -> FamilySpec:
    """Parse the CLI family syntax.

    Examples: ``cycle:5``, ``kbip:2,3``, ``tree:20,7``, ``csub:complete:4``,
    ``skn:4`` (shorthand for ``csub:complete:4``), ``ksub:5:complete:4``,
    ``corona:cycle:4``, ``product:complete:3*complete:3``, ``kite``.
    """
    text = text.strip()
    if text.startswith("product:"):
        left, star, right = text[len("product:") :].partition("*")
        if not star:
            raise InvalidSpec(f"product needs two factors joined by '*': {text!r}")
        return CartesianProduct(parse_family(left), parse_family(right))
    head, _, rest = text.partition(":")
    head = _ALIASES.get(head.lower(), head.lower())
    try:
        if head in _SIMPLE:
            args = tuple(int(x) for x in rest.split(",")) if rest else ()
            return FamilySpec(head, args)
        if head == "skn":
            return CompleteSubdivision(Complete(int(rest)))
        if head in ("csub", "corona"):
            return FamilySpec(head, (), parse_family(rest))
        if head == "ksub":
            k, _, base = rest.partition(":")
            return KSubdivision(parse_family(base), int(k))
    except ValueError as exc:
        raise InvalidSpec(f"bad family parameters in {text!r}") from exc
    if head in ("kite", "chordal_remark") and not rest:
        return FamilySpec(head)
    raise InvalidSpec(f"unknown family {text!r}")
