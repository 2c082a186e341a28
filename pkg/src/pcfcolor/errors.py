"""Exception hierarchy.

Three families matter to callers (and map onto CLI exit codes):

* ``PreconditionError`` -- the input does not satisfy what an operation needs
  (wrong graph class, failed hypothesis, malformed coloring).
* ``FormatError`` -- unreadable serialized input.
* ``InternalContradiction`` -- a step that a theorem guarantees has failed.
  This always indicates a bug; the exception carries a reproducer.
"""

from __future__ import annotations

from typing import Any


class PCFError(Exception):
    """Base class for every error raised by this package."""


class PreconditionError(PCFError):
    pass


class InvalidEdge(PreconditionError):
    pass


class InvalidSpec(PreconditionError):
    pass


class HypothesisViolated(PreconditionError):
    """A theorem hypothesis (girth, distance, mad threshold, ...) fails."""

    def __init__(self, which: str, detail: str = "") -> None:
        self.which = which
        self.detail = detail
        super().__init__(f"{which}: {detail}" if detail else which)


class NotConnected(PreconditionError):
    pass


class NotATree(PreconditionError):
    pass


class NotClawFree(PreconditionError):
    def __init__(self, claw: tuple[int, int, int, int]) -> None:
        self.claw = claw
        super().__init__(f"induced claw centered at {claw[0]} with leaves {claw[1:]}")


class NotChordal(PreconditionError):
    pass


class NoTotalDominatingSet(PreconditionError):
    pass


class PartialColoring(PreconditionError):
    pass


class BadColor(PreconditionError):
    pass


class BadBase(PreconditionError):
    pass


class BadDominatingSet(PreconditionError):
    pass


class BadMatching(PreconditionError):
    pass


class BadForest(PreconditionError):
    pass


class TooShort(PreconditionError):
    pass


class TooLarge(PreconditionError):
    pass


class TooLargeFrontier(PreconditionError):
    pass


class UseIngestion(PreconditionError):
    pass


class NotOuterplanarEvidence(PreconditionError):
    pass


class NotFPlusPendant(PreconditionError):
    pass


class FormatError(PCFError):
    def __init__(self, message: str, offset: int | None = None) -> None:
        self.offset = offset
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)


class InternalContradiction(PCFError):
    """A guaranteed step failed; ``reproducer`` holds graph, coloring and step."""

    def __init__(self, message: str, reproducer: dict[str, Any] | None = None) -> None:
        self.reproducer = reproducer or {}
        super().__init__(message)
