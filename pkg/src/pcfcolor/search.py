"""Exhaustive small-graph experiments on the Delta + 1 conjecture and the
empirical profile of f(Delta) = max chi_pcf over graphs of maximum degree Delta."""

from __future__ import annotations

import time
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .canon import enumerate_connected
from .exact.solver import chromatic_value
from .graph import Graph
from .io import emit_graph6, parse_graph6
from .verify import Variant


@dataclass
class SearchReport:
    """``empirical_f`` maps Delta to ``(max chi_pcf seen, graph6 witness)``.

    Values are lower bounds on f over the examined graphs only.
    """

    n_range: tuple[int, int]
    graphs_examined: int
    counterexamples: list[str]
    empirical_f: dict[int, tuple[int, str]]
    delta_min: int = 3
    runtime: dict[str, float] = field(default_factory=dict)


def _evaluate(g6: str) -> tuple[str, int, int]:
    g = parse_graph6(g6)
    return g6, g.max_degree, chromatic_value(g, Variant.PCF).value


def _stream(graphs: Iterable[str], workers: int) -> Iterable[tuple[str, int, int]]:
    if workers <= 1:
        return map(_evaluate, graphs)
    pool = ProcessPoolExecutor(max_workers=workers)
    # map() preserves input order, so the merge is schedule-independent.
    return _closing(pool, pool.map(_evaluate, graphs, chunksize=64))


def _closing(pool: ProcessPoolExecutor, it: Iterable) -> Iterable:
    try:
        yield from it
    finally:
        pool.shutdown()


def _connected_upto(n_max: int, n_min: int = 1) -> Iterable[str]:
    for n in range(n_min, n_max + 1):
        for g in enumerate_connected(n):
            yield emit_graph6(g)


def search_graphs(
    graphs: Iterable[Graph | str],
    delta_min: int = 3,
    workers: int = 1,
    progress: Callable[[int], None] | None = None,
    n_range: tuple[int, int] | None = None,
) -> SearchReport:
    """Compute chi_pcf for each graph; collect Delta + 1 violations (Delta >= delta_min) and the f profile."""
    start = time.perf_counter()
    codes = (x if isinstance(x, str) else emit_graph6(x) for x in graphs)
    examined = 0
    bad: list[str] = []
    best: dict[int, tuple[int, str]] = {}
    lo, hi = None, 0
    for g6, delta, value in _stream(codes, workers):
        examined += 1
        n = parse_graph6(g6).n
        lo, hi = n if lo is None else min(lo, n), max(hi, n)
        if delta >= delta_min and value > delta + 1:
            bad.append(g6)
        if delta >= 1 and (delta not in best or value > best[delta][0]):
            best[delta] = (value, g6)
        if progress is not None:
            progress(examined)
    return SearchReport(
        n_range or (lo or 0, hi),
        examined,
        bad,
        dict(sorted(best.items())),
        delta_min,
        {"seconds": time.perf_counter() - start},
    )


def search_conjecture(
    n_max: int,
    delta_min: int = 3,
    workers: int = 1,
    progress: Callable[[int], None] | None = None,
) -> SearchReport:
    """Look for connected graphs on up to ``n_max`` vertices with chi_pcf > Delta + 1."""
    return search_graphs(_connected_upto(n_max), delta_min, workers, progress, (1, n_max))


def empirical_f(n_max: int, workers: int = 1) -> dict[int, tuple[int, str]]:
    """Delta -> (largest chi_pcf among connected graphs on <= n_max vertices, witness)."""
    return search_conjecture(n_max, workers=workers).empirical_f


def f_within_range(profile: dict[int, tuple[int, str]]) -> bool:
    """Each observed value lies between Delta + 1 and floor(5 Delta / 2)."""
    return all(d + 1 <= v <= 5 * d // 2 for d, (v, _) in profile.items())
