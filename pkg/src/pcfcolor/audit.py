"""Check the known bounds on the PCF chromatic number against exact values."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any

from .errors import InvalidSpec, NotConnected, TooLarge
from .exact.solver import SolveResult, chromatic_value
from .graph import Graph, degeneracy
from .structure.classes import is_claw_free, lexbfs_peo
from .structure.domination import total_domination_number
from .verify import Variant

MAX_AUDIT_N = 16

BOUND_IDS = (
    "chain",
    "product",
    "domination",
    "universal",
    "degeneracy",
    "maxdegree",
    "clawfree",
    "chordal",
)


@dataclass
class AuditRecord:
    bound_id: str
    lhs: Any
    rhs: Any
    holds: bool
    equality: bool
    witnesses: dict[str, Any] = field(default_factory=dict)
    applicable: bool = True


def _guard(g: Graph) -> None:
    if g.n > MAX_AUDIT_N:
        raise TooLarge(f"exact audits are limited to n <= {MAX_AUDIT_N}, got n={g.n}")


def _is_k2_or_c5(g: Graph) -> bool:
    if g.n == 2:
        return g.m == 1
    return g.n == 5 and g.m == 5 and g.is_connected() and all(d == 2 for d in g.degrees)


class _Values:
    """Exact parameters of one graph, computed on first use."""

    def __init__(self, g: Graph) -> None:
        self.g = g

    def _solve(self, variant: Variant) -> SolveResult:
        return chromatic_value(self.g, variant)

    @cached_property
    def chi(self) -> SolveResult:
        return self._solve(Variant.PROPER)

    @cached_property
    def odd(self) -> SolveResult:
        return self._solve(Variant.ODD)

    @cached_property
    def cf(self) -> SolveResult:
        return self._solve(Variant.CF)

    @cached_property
    def pcf(self) -> SolveResult:
        return self._solve(Variant.PCF)


def _na(bound_id: str, why: str) -> AuditRecord:
    return AuditRecord(bound_id, None, None, True, False, {"reason": why}, applicable=False)


def _upper(bound_id: str, lhs: int, rhs: int, **witnesses) -> AuditRecord:
    return AuditRecord(bound_id, lhs, rhs, lhs <= rhs, lhs == rhs, witnesses)


def _characterized(bound_id: str, g: Graph, lhs: int, rhs: int) -> AuditRecord:
    # Upper bound whose equality cases are exactly K2 and C5.
    special = _is_k2_or_c5(g)
    rec = _upper(bound_id, lhs, rhs, equality_graph=special)
    rec.holds = rec.holds and rec.equality == special
    return rec


def _audit_one(bound_id: str, g: Graph, v: _Values) -> AuditRecord:
    if bound_id == "chain":
        chi, odd, pcf = v.chi.value, v.odd.value, v.pcf.value
        rec = AuditRecord("chain", odd, pcf, chi <= odd <= pcf, odd == pcf, {"chi": chi})
        rec.witnesses["pcf_coloring"] = list(v.pcf.witness.colors)
        return rec
    if bound_id == "product":
        return _upper(
            "product",
            v.pcf.value,
            v.cf.value * v.chi.value,
            chi_cf=v.cf.value,
            chi=v.chi.value,
            cf_coloring=list(v.cf.witness.colors),
        )
    if g.n < 2:
        return _na(bound_id, "needs a connected graph with an edge")
    if not g.is_connected():
        raise NotConnected(f"bound {bound_id!r} needs a connected graph")
    delta = g.max_degree
    if bound_id == "domination":
        gamma, dom = total_domination_number(g)
        return _upper("domination", v.pcf.value, gamma + v.chi.value, gamma_t=gamma, D=sorted(dom))
    if bound_id == "universal":
        hubs = [u for u in range(g.n) if g.degree(u) == g.n - 1]
        if not hubs:
            return _na("universal", "no vertex adjacent to all others")
        return _upper("universal", v.pcf.value, v.chi.value + 2, vertex=hubs[0])
    if bound_id == "degeneracy":
        k = degeneracy(g)
        rec = _characterized("degeneracy", g, v.pcf.value, 2 * delta + k // 2)
        rec.witnesses["degeneracy"] = k
        return rec
    if bound_id == "maxdegree":
        return _characterized("maxdegree", g, v.pcf.value, 5 * delta // 2)
    if bound_id == "clawfree":
        if not is_claw_free(g):
            return _na("clawfree", "graph contains an induced claw")
        return _upper("clawfree", v.pcf.value, 2 * delta + 1)
    if bound_id == "chordal":
        if lexbfs_peo(g) is None:
            return _na("chordal", "graph is not chordal")
        return _upper("chordal", v.pcf.value, 2 * delta + 1)
    raise InvalidSpec(f"unknown bound id {bound_id!r}")


def parse_bounds(which: Iterable[str] | str | None) -> list[str]:
    """Normalize a bound selection; ``None`` or ``"all"`` means every bound."""
    if which is None or which == "all":
        return list(BOUND_IDS)
    items = which.split(",") if isinstance(which, str) else list(which)
    out = [b.strip().lower() for b in items if b.strip()]
    bad = [b for b in out if b not in BOUND_IDS]
    if bad:
        raise InvalidSpec(f"unknown bound ids {bad}; choose from {', '.join(BOUND_IDS)}")
    return [b for b in BOUND_IDS if b in out]


def audit_bounds(g: Graph, which: Iterable[str] | str | None = None) -> list[AuditRecord]:
    ids = parse_bounds(which)
    _guard(g)
    values = _Values(g)
    return [_audit_one(b, g, values) for b in ids]


def _neighborhood_chi(g: Graph, v: int) -> int:
    sub, _ = g.induced(g.adj[v])
    return chromatic_value(sub, Variant.PROPER).value


def check_half_neighborhood(g: Graph) -> tuple[bool, bool]:
    """Whether chi(N(v)) >= deg(v)//2 + 1 everywhere; if so, whether chi_pcf = chi."""
    _guard(g)
    holds = all(_neighborhood_chi(g, v) >= g.degree(v) // 2 + 1 for v in range(g.n) if g.degree(v))
    if not holds:
        return False, False
    v = _Values(g)
    return True, v.pcf.value == v.chi.value


def check_clawfree_odd(g: Graph) -> tuple[bool, bool]:
    """Whether ``g`` is claw-free with all degrees odd; if so, whether chi_pcf = chi."""
    _guard(g)
    applicable = is_claw_free(g) and all(d % 2 == 1 for d in g.degrees)
    if not applicable:
        return False, False
    v = _Values(g)
    return True, v.pcf.value == v.chi.value
