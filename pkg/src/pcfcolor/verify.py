"""Ground-truth predicates for proper, conflict-free, PCF and odd colorings."""

from __future__ import annotations

from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum

from .errors import BadColor, PartialColoring
from .graph import Graph

UNASSIGNED = 0


class Variant(str, Enum):
    PROPER = "proper"
    ODD = "odd"
    CF = "cf"
    PCF = "pcf"

    @property
    def needs_proper(self) -> bool:
        return self is not Variant.CF

    @classmethod
    def parse(cls, value: str | Variant) -> Variant:
        if isinstance(value, Variant):
            return value
        try:
            return cls(value.lower())
        except ValueError:
            raise ValueError(f"unknown variant {value!r}; expected one of proper, odd, cf, pcf") from None


Mode = Variant


@dataclass(frozen=True)
class Coloring:
    """Vertex colors in ``1..k``; ``0`` marks an unassigned vertex."""

    colors: tuple[int, ...]
    k: int

    @classmethod
    def of(cls, colors: Sequence[int] | Coloring, k: int | None = None) -> Coloring:
        if isinstance(colors, Coloring):
            return colors if k is None else cls(colors.colors, k)
        colors = tuple(int(c) for c in colors)
        return cls(colors, max(colors, default=0) if k is None else k)

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __iter__(self):
        return iter(self.colors)

    @property
    def is_total(self) -> bool:
        return UNASSIGNED not in self.colors

    @property
    def used(self) -> int:
        return len({c for c in self.colors if c != UNASSIGNED})


@dataclass
class VerifyReport:
    mode: Variant
    ok: bool
    proper_violations: list[tuple[int, int]] = field(default_factory=list)
    cf_failures: list[tuple[int, str]] = field(default_factory=list)
    witnesses: dict[int, int] = field(default_factory=dict)


def unique_colors(counts: Counter) -> list[int]:
    return sorted(c for c, x in counts.items() if x == 1)


def verify(g: Graph, coloring: Sequence[int] | Coloring, mode: Variant | str = Variant.PCF) -> VerifyReport:
    """Check a total coloring; every violation is reported, not just the first."""
    mode = Variant.parse(mode)
    col = Coloring.of(coloring)
    if len(col) != g.n:
        raise PartialColoring(f"coloring has {len(col)} entries for {g.n} vertices")
    for v, c in enumerate(col.colors):
        if c == UNASSIGNED:
            raise PartialColoring(f"vertex {v} is unassigned")
        if not 1 <= c <= col.k:
            raise BadColor(f"vertex {v} has color {c} outside 1..{col.k}")
    return _check(g, col.colors, mode, present=None)


def verify_partial(g: Graph, coloring: Sequence[int] | Coloring, mode: Variant | str = Variant.PCF) -> VerifyReport:
    """Check the subgraph induced by the colored vertices.

    Unassigned vertices are treated as absent, so a vertex whose colored
    neighborhood is empty is exempt from the neighborhood condition.
    """
    mode = Variant.parse(mode)
    colors = Coloring.of(coloring).colors
    present = [c != UNASSIGNED for c in colors]
    return _check(g, colors, mode, present)


def _check(g: Graph, colors: Sequence[int], mode: Variant, present: list[bool] | None) -> VerifyReport:
    report = VerifyReport(mode=mode, ok=True)
    for v in range(g.n):
        if present is not None and not present[v]:
            continue
        nbrs = [w for w in g.adj[v] if present is None or present[w]]
        if mode.needs_proper:
            report.proper_violations.extend((v, w) for w in nbrs if v < w and colors[w] == colors[v])
        if mode is Variant.PROPER or not nbrs:
            continue
        counts = Counter(colors[w] for w in nbrs)
        if mode is Variant.ODD:
            good = sorted(c for c, x in counts.items() if x % 2 == 1)
            reason = "no color appears an odd number of times"
        else:
            good = unique_colors(counts)
            reason = "no color appears exactly once"
        if good:
            report.witnesses[v] = good[0]
        else:
            report.cf_failures.append((v, f"{reason} in N({v}): {dict(sorted(counts.items()))}"))
    report.ok = not report.proper_violations and not report.cf_failures
    return report


def is_pcf(g: Graph, colors: Sequence[int]) -> bool:
    return verify(g, colors, Variant.PCF).ok
