"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``PCFCOLOR_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _pykernel

python_search = _pykernel.search

try:
    if os.environ.get("PCFCOLOR_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure Python kernel requested")
    from ._kernel import search as compiled_search  # type: ignore[import-not-found]

    BACKEND = "cython"
except ImportError:
    compiled_search = None
    BACKEND = "python"

search = compiled_search or python_search


def get_search(backend: str | None = None):
    if backend is None:
        return search
    if backend == "python":
        return python_search
    if backend == "cython":
        if compiled_search is None:
            raise RuntimeError("compiled kernel not available; build the extension first")
        return compiled_search
    raise ValueError(f"unknown backend {backend!r}")
