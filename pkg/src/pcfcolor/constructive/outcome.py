"""Result type shared by all constructive colorers."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from ..errors import InternalContradiction
from ..graph import Graph
from ..verify import Coloring, Variant, verify


@dataclass
class ConstructionOutcome:
    """A verified PCF coloring of ``graph`` together with the bound it meets.

    ``trace`` lists which case of the underlying argument fired at each step.
    """

    coloring: Coloring
    colors_used: int
    bound: int
    trace: list[str] = field(default_factory=list)
    graph: Graph | None = None


@dataclass
class FMembership:
    """Returned instead of a coloring when the input lies in the C5-block family."""

    graph: Graph
    blocks: int
    value: int = 5


def reproducer(g: Graph, colors: Sequence[int], step: str) -> dict:
    from ..io import emit_graph6

    return {"graph6": emit_graph6(g), "coloring": list(colors), "step": step}


def finish(g: Graph, colors: Sequence[int], bound: int, trace: list[str], what: str) -> ConstructionOutcome:
    """Verify and package; any failure here is a bug, never a bad input."""
    colors = [int(c) for c in colors]
    report = verify(g, Coloring.of(colors, max(colors, default=0)), Variant.PCF)
    used = len(set(colors))
    if not report.ok or max(colors, default=0) > bound:
        detail = report.proper_violations[:3] or report.cf_failures[:3] or f"palette exceeds {bound}"
        raise InternalContradiction(f"{what} produced an invalid coloring: {detail}", reproducer(g, colors, what))
    return ConstructionOutcome(Coloring(tuple(colors), bound), used, bound, trace, g)
