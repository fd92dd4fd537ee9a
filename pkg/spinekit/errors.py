"""Exception hierarchy.

Every error carries the process exit code the CLI reports for it and a
human-readable ``detail``.
"""
from typing import Optional


class SpineKitError(Exception):
    """Base error with an exit code and a detail message."""

    exit_code: int = 2

    def __init__(self, detail: str, exit_code: Optional[int] = None):
        super().__init__(detail)
        self.detail = detail
        if exit_code is not None:
            self.exit_code = exit_code

    def __str__(self) -> str:
        return self.detail


class ParseError(SpineKitError):
    """Input text could not be turned into a valid structure."""


class OGraphSyntaxError(ParseError):
    """Malformed line in an o-graph file."""

    def __init__(self, detail: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            detail = f"line {line}: {detail}"
        super().__init__(detail)


class EmptyGraphError(ParseError):
    """O-graph declares no vertices."""

    def __init__(self):
        super().__init__("no vertices")


class RegularityError(ParseError):
    """A vertex does not carry exactly four edge-ends."""

    def __init__(self, vertex: int, count: int):
        self.vertex = vertex
        self.count = count
        super().__init__(f"vertex {vertex} has {count} edge-ends, expected 4")


class DanglingEndError(ParseError):
    """An edge-end refers to a missing vertex or slot, or a slot is unused."""

    def __init__(self, end: str, reason: str):
        self.end = end
        super().__init__(f"end {end} {reason}")


class ColorRangeError(ParseError):
    """Edge color outside Z_3."""

    def __init__(self, color: int, line: Optional[int] = None):
        self.color = color
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}color {color} not in {{0,1,2}}")


class TriangulationSyntaxError(ParseError):
    """Malformed line in a triangulation file."""

    def __init__(self, detail: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            detail = f"line {line}: {detail}"
        super().__init__(detail)


class PairingError(ParseError):
    """Face pairings do not form an involutive perfect matching."""


class NotSimpleError(SpineKitError):
    """Invariants requested for a selection that is not a simple subpolyhedron."""


class TooManyComponentsError(SpineKitError):
    """Too many 2-components for bitmask enumeration."""

    def __init__(self, k: int, limit: int):
        self.k = k
        self.limit = limit
        super().__init__(f"too many 2-components: {k} > {limit}")


class OrientationError(SpineKitError):
    """Boundary surface has a non-orientable component."""


class DomainError(SpineKitError):
    """Numerical argument outside the admissible range."""


class VerificationError(SpineKitError):
    """One or more acceptance checks failed."""

    exit_code = 1
