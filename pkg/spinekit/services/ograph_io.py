"""O-graph text format: parsing, validation and canonical serialization."""
import logging
import re
from collections import Counter
from pathlib import Path
from typing import Dict, List, Optional, Union

from spinekit.config import settings
from spinekit.errors import (
    ColorRangeError,
    DanglingEndError,
    EmptyGraphError,
    OGraphSyntaxError,
    RegularityError,
    SpineKitError,
)
from spinekit.models.schemas import Crossing, EndRef, OEdge, OGraph

logger = logging.getLogger(__name__)

HEADER = "ograph v1"

_VERTICES_RE = re.compile(r"^vertices\s+(\d+)$")
_VERTEX_RE = re.compile(r"^vertex\s+(\d+)\s+over\s+(\S+)$")
_EDGE_RE = re.compile(r"^edge\s+(\d+)\.(\d+)\s+(\d+)\.(\d+)\s+color\s+(-?\d+)$")


def _content_lines(text: str):
    """Yield (line number, stripped content) with comments and blanks removed."""
    for number, raw in enumerate(text.split("\n"), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            yield number, content


def _decode(text: Union[bytes, str]) -> str:
    if isinstance(text, str):
        return text
    try:
        return text.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise OGraphSyntaxError(f"not UTF-8 text ({exc.reason})")


def parse_ograph(text: Union[bytes, str]) -> OGraph:
    """
    Parse an o-graph file.

    Args:
        text: File contents in the ``ograph v1`` format

    Returns:
        Validated OGraph in canonical form

    Raises:
        OGraphSyntaxError: Malformed line (with line number)
        EmptyGraphError: No vertices declared
        RegularityError: A vertex without exactly four ends
        DanglingEndError: End pointing nowhere, or a slot left unattached
        ColorRangeError: Color outside {0,1,2}
    """
    source = _decode(text)
    header_seen = False
    n: Optional[int] = None
    over: Dict[int, str] = {}
    edges: List[OEdge] = []

    for number, line in _content_lines(source):
        if not header_seen:
            if line != HEADER:
                raise OGraphSyntaxError(f"expected '{HEADER}', got '{line}'", number)
            header_seen = True
            continue

        match = _VERTICES_RE.match(line)
        if match:
            if n is not None:
                raise OGraphSyntaxError("duplicate 'vertices' line", number)
            n = int(match.group(1))
            if n == 0:
                raise EmptyGraphError()
            continue

        match = _VERTEX_RE.match(line)
        if match:
            if n is None:
                raise OGraphSyntaxError("'vertex' before 'vertices'", number)
            index, diagonal = int(match.group(1)), match.group(2)
            if diagonal not in ("02", "13"):
                raise OGraphSyntaxError(f"over-strand must be 02 or 13, got '{diagonal}'", number)
            if index >= n:
                raise OGraphSyntaxError(f"vertex {index} out of range 0..{n - 1}", number)
            if index in over:
                raise OGraphSyntaxError(f"vertex {index} described twice", number)
            over[index] = diagonal
            continue

        match = _EDGE_RE.match(line)
        if match:
            if n is None:
                raise OGraphSyntaxError("'edge' before 'vertices'", number)
            va, sa, vb, sb, color = (int(g) for g in match.groups())
            if color not in (0, 1, 2):
                raise ColorRangeError(color, number)
            for vertex, slot in ((va, sa), (vb, sb)):
                if vertex >= n or slot > 3:
                    raise DanglingEndError(f"{vertex}.{slot}", f"on line {number} refers to no vertex slot")
            edges.append(OEdge(
                end_a=EndRef(vertex=va, slot=sa),
                end_b=EndRef(vertex=vb, slot=sb),
                color=color
            ))
            continue

        raise OGraphSyntaxError(f"unrecognized line '{line}'", number)

    if not header_seen:
        raise OGraphSyntaxError(f"missing '{HEADER}' header")
    if n is None:
        raise EmptyGraphError()
    for index in range(n):
        if index not in over:
            raise OGraphSyntaxError(f"vertex {index} has no 'vertex' line")

    graph = OGraph(
        vertices=[Crossing(index=i, over=over[i]) for i in range(n)],
        edges=edges
    ).canonical()
    validate(graph)
    logger.debug(f"Parsed o-graph with {n} vertices and {len(edges)} edges")
    return graph


def validate(graph: OGraph) -> None:
    """
    Check the o-graph invariants.

    Raises:
        EmptyGraphError, RegularityError, DanglingEndError, ColorRangeError
    """
    n = graph.n_vertices
    if n == 0:
        raise EmptyGraphError()
    if sorted(v.index for v in graph.vertices) != list(range(n)):
        raise OGraphSyntaxError("vertex indices must be 0..n-1, each once")

    counts: Counter = Counter()
    used: Dict[int, List[int]] = {i: [] for i in range(n)}
    for edge in graph.edges:
        if edge.color not in (0, 1, 2):
            raise ColorRangeError(edge.color)
        for end in (edge.end_a, edge.end_b):
            if end.vertex >= n:
                raise DanglingEndError(str(end), "refers to no vertex")
            counts[end.vertex] += 1
            used[end.vertex].append(end.slot)

    for index in range(n):
        if counts[index] != 4:
            raise RegularityError(index, counts[index])
    for index in range(n):
        for slot in range(4):
            if slot not in used[index]:
                raise DanglingEndError(f"{index}.{slot}", "is not attached to any edge")


def serialize(graph: OGraph) -> bytes:
    """Canonical text of an o-graph (UTF-8, LF line endings)."""
    canonical = graph.canonical()
    lines = [HEADER, f"vertices {canonical.n_vertices}"]
    lines.extend(f"vertex {v.index} over {v.over}" for v in canonical.vertices)
    lines.extend(
        f"edge {e.end_a} {e.end_b} color {e.color}" for e in canonical.edges
    )
    return ("\n".join(lines) + "\n").encode("utf-8")


def read_ograph(path: Union[str, Path]) -> OGraph:
    """Read and parse an o-graph file."""
    path = Path(path)
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise SpineKitError(f"cannot read {path}: {exc.strerror or exc}")
    return parse_ograph(data)


def load_fixture(name: str, root: Optional[Path] = None) -> OGraph:
    """Load a transcribed fixture (``g5``, ``g9``, ``g9_drawn``) by name."""
    base = Path(root) if root is not None else settings.fixture_root()
    return read_ograph(base / f"{name}.og")
