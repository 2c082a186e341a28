"""Biconnected components, cut vertices and the block-cut tree."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import NotConnected
from ..graph import Graph


@dataclass(frozen=True)
class BlockDecomposition:
    """``blocks[i]`` is a sorted vertex tuple; ``tree`` maps ``("b", i)`` and
    ``("c", v)`` nodes of the block-cut tree to their neighbors."""

    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: frozenset[int]
    tree: dict[tuple[str, int], tuple[tuple[str, int], ...]]

    def blocks_at(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if v in b]

    def end_blocks(self) -> list[int]:
        """Blocks containing at most one cut vertex (leaves of the block-cut tree)."""
        return [i for i, b in enumerate(self.blocks) if sum(v in self.cut_vertices for v in b) <= 1]


def blocks(g: Graph) -> BlockDecomposition:
    """Hopcroft-Tarjan with an explicit stack; isolated vertices are omitted."""
    disc = [-1] * g.n
    low = [0] * g.n
    timer = 0
    found: list[tuple[int, ...]] = []
    cuts: set[int] = set()
    for root in range(g.n):
        if disc[root] != -1 or not g.adj[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(g.adj[root]))]
        root_children = 0
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(g.adj[w])))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent != root:
                    cuts.add(parent)
                comp: set[int] = set()
                while True:
                    a, b = edge_stack.pop()
                    comp.update((a, b))
                    if (a, b) == (parent, v):
                        break
                found.append(tuple(sorted(comp)))
        if root_children > 1:
            cuts.add(root)

    tree: dict[tuple[str, int], list[tuple[str, int]]] = {}
    for i, b in enumerate(found):
        tree[("b", i)] = [("c", v) for v in b if v in cuts]
        for v in b:
            if v in cuts:
                tree.setdefault(("c", v), []).append(("b", i))
    return BlockDecomposition(
        tuple(found), frozenset(cuts), {key: tuple(val) for key, val in tree.items()}
    )


def is_cycle_block(g: Graph, block: tuple[int, ...], length: int) -> bool:
    if len(block) != length:
        return False
    inside = set(block)
    return all(sum(w in inside for w in g.adj[v]) == 2 for v in block)


def is_in_F(g: Graph) -> bool:
    """True iff every block of the connected graph ``g`` is a 5-cycle."""
    if not g.is_connected():
        raise NotConnected("membership in F is defined for connected graphs")
    if g.n < 2:
        return False
    bd = blocks(g)
    return all(is_cycle_block(g, b, 5) for b in bd.blocks)
