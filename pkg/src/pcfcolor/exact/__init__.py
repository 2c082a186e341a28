"""Exhaustive solvers for the chromatic number and its odd, CF and PCF variants."""

from ._backend import BACKEND
from .solver import SolveResult, chromatic_value, decide_k, extend_locally, search_order

__all__ = ["BACKEND", "SolveResult", "chromatic_value", "decide_k", "extend_locally", "search_order"]
