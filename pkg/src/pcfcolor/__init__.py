"""Proper conflict-free graph coloring toolkit.

Exact solvers, certified constructions, bound audits and small-graph
searches for proper conflict-free (PCF) colorings and related variants.
"""

from .errors import FormatError, InternalContradiction, PCFError, PreconditionError
from .exact import BACKEND, chromatic_value, decide_k, extend_locally
from .families import generate, parse_family
from .graph import Graph, build_graph, stats
from .io import emit_graph6, parse_dimacs, parse_graph6
from .verify import Coloring, Variant, verify

__all__ = [
    "BACKEND",
    "Coloring",
    "FormatError",
    "Graph",
    "InternalContradiction",
    "PCFError",
    "PreconditionError",
    "Variant",
    "build_graph",
    "chromatic_value",
    "decide_k",
    "emit_graph6",
    "extend_locally",
    "generate",
    "parse_dimacs",
    "parse_family",
    "parse_graph6",
    "stats",
    "verify",
]
