"""graph6 and DIMACS readers/writers and stable JSON serialization."""

from __future__ import annotations

import dataclasses
import json
from collections.abc import Iterator
from enum import Enum
from fractions import Fraction
from typing import Any

from .errors import FormatError
from .graph import Graph, build_graph

_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise FormatError(f"graph6 cannot encode n={n}")


def emit_graph6(g: Graph) -> str:
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[i : i + 6])), 2)) for i in range(0, len(bits), 6)
    )
    return _encode_n(g.n) + body


def _sextet(line: str, pos: int) -> int:
    value = ord(line[pos]) - 63
    if not 0 <= value < 64:
        raise FormatError(f"invalid graph6 character {line[pos]!r}", pos)
    return value


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 string (an optional ``>>graph6<<`` header is skipped)."""
    line = line.rstrip("\r\n")
    start = len(_HEADER) if line.startswith(_HEADER) else 0
    pos = start
    if pos >= len(line):
        raise FormatError("empty graph6 string", pos)
    first = _sextet(line, pos)
    if first < 63:
        n, pos = first, pos + 1
    else:
        wide = pos + 1 < len(line) and line[pos + 1] == "~"
        width = 6 if wide else 3
        pos += 2 if wide else 1
        if pos + width > len(line):
            raise FormatError("truncated graph6 size field", len(line))
        n = 0
        for i in range(width):
            n = (n << 6) | _sextet(line, pos + i)
        pos += width
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(line) - pos != need:
        raise FormatError(f"graph6 body has {len(line) - pos} bytes, expected {need} for n={n}", pos)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = _sextet(line, pos + k // 6)
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    for tail in range(k, need * 6):
        if _sextet(line, pos + tail // 6) >> (5 - tail % 6) & 1:
            raise FormatError("nonzero padding bits", pos + tail // 6)
    return build_graph(n, edges)


def read_graph6_lines(text: str) -> Iterator[Graph]:
    for line in text.splitlines():
        if line.strip():
            yield parse_graph6(line.strip())


def parse_dimacs(text: str) -> Graph:
    """DIMACS ``.col``: ``c`` comments, one ``p edge n m`` header, 1-indexed ``e u v`` lines."""
    n: int | None = None
    edges: list[tuple[int, int]] = []
    offset = 0
    for raw in text.splitlines(keepends=True):
        line = raw.strip()
        here = offset
        offset += len(raw)
        if not line or line[0] == "c":
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise FormatError("duplicate problem line", here)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise FormatError(f"malformed problem line {line!r}", here)
            try:
                n = int(parts[2])
                int(parts[3])
            except ValueError:
                raise FormatError(f"malformed problem line {line!r}", here) from None
        elif parts[0] == "e":
            if n is None:
                raise FormatError("edge line before the problem line", here)
            if len(parts) != 3:
                raise FormatError(f"malformed edge line {line!r}", here)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise FormatError(f"malformed edge line {line!r}", here) from None
            if not (1 <= u <= n and 1 <= v <= n) or u == v:
                raise FormatError(f"edge ({u}, {v}) out of range for n={n}", here)
            edges.append((u - 1, v - 1))
        else:
            raise FormatError(f"unknown line type {parts[0]!r}", here)
    if n is None:
        raise FormatError("missing 'p edge n m' header", 0)
    return build_graph(n, edges)


def emit_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"] + [f"e {u + 1} {v + 1}" for u, v in g.edge_list]
    return "\n".join(lines) + "\n"


def load_graph(path: str) -> list[Graph]:
    """Read a ``.col``/``.dimacs`` file (one graph) or a graph6 file (one per line)."""
    with open(path, encoding="ascii") as fh:
        text = fh.read()
    if path.endswith((".col", ".dimacs")) or text.lstrip().startswith(("p ", "c")):
        return [parse_dimacs(text)]
    return list(read_graph6_lines(text))


def to_jsonable(obj: Any) -> Any:
    """Plain-data view with dataclass field order preserved."""
    if isinstance(obj, Graph):
        return {"n": obj.n, "m": obj.m, "graph6": emit_graph6(obj)}
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, float) and obj == float("inf"):
        return "inf"
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k) if not isinstance(k, str) else k: to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [to_jsonable(x) for x in items]
    return obj


def emit_json(result: Any, drop: tuple[str, ...] = ()) -> str:
    """Serialize a result object; ``drop`` removes volatile top-level keys (e.g. timings)."""
    data = to_jsonable(result)
    if isinstance(data, dict):
        data = {k: v for k, v in data.items() if k not in drop}
    return json.dumps(data, indent=2)
