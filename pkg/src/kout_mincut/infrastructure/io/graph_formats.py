"""Edge-list and DIMACS graph files.

Edge list: a header line ``n m`` followed by ``m`` lines ``u v`` with 0-based
vertices. DIMACS: a ``p edge n m`` header and ``e u v`` lines with 1-based
vertices, shifted to 0-based on load. Blank lines and comments (``#`` in edge
lists, ``c`` in DIMACS) are ignored. Edge ids follow input order.
"""

import io
from pathlib import Path
from typing import BinaryIO, TextIO

from kout_mincut.domain.exceptions import GraphFormatError, SimplicityViolationError
from kout_mincut.domain.models.graph_models import GraphFormat, SimpleGraph


def _read_text(source: BinaryIO | TextIO) -> str:
    data = source.read()
    if isinstance(data, bytes):
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise GraphFormatError(f"input is not UTF-8: {e}") from e
    return data


def _int(token: str, line_number: int, what: str) -> int:
    try:
        return int(token)
    except ValueError as e:
        raise GraphFormatError(f"{what} '{token}' is not an integer", line_number=line_number) from e


def _content_lines(text: str, comment: str):
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(comment):
            continue
        yield line_number, line.split()


def _parse(text: str, fmt: GraphFormat) -> SimpleGraph:
    dimacs = fmt == GraphFormat.DIMACS
    offset = 1 if dimacs else 0
    lines = _content_lines(text, "c" if dimacs else "#")

    header = next(lines, None)
    if header is None:
        raise GraphFormatError("missing header line")
    line_number, tokens = header
    if dimacs:
        if len(tokens) != 4 or tokens[0] != "p" or tokens[1] != "edge":
            raise GraphFormatError("expected header 'p edge n m'", line_number=line_number)
        tokens = tokens[2:]
    elif len(tokens) != 2:
        raise GraphFormatError("expected header 'n m'", line_number=line_number)
    n = _int(tokens[0], line_number, "vertex count")
    m = _int(tokens[1], line_number, "edge count")
    if n < 0 or m < 0:
        raise GraphFormatError("vertex and edge counts must be non-negative", line_number=line_number)

    pairs: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    for line_number, tokens in lines:
        if dimacs:
            if tokens[0] != "e":
                raise GraphFormatError(f"expected an 'e u v' line, got '{tokens[0]}'", line_number=line_number)
            tokens = tokens[1:]
        if len(tokens) != 2:
            raise GraphFormatError("expected exactly two vertex ids", line_number=line_number)
        u = _int(tokens[0], line_number, "vertex") - offset
        v = _int(tokens[1], line_number, "vertex") - offset
        if not (0 <= u < n and 0 <= v < n):
            low, high = offset, n - 1 + offset
            raise GraphFormatError(f"vertex outside {low}..{high}", line_number=line_number)
        if u == v:
            raise SimplicityViolationError(
                f"line {line_number}: self-loop at vertex {u + offset}",
                pair=(u, v),
                details={"line_number": line_number},
            )
        key = (min(u, v), max(u, v))
        if key in seen:
            raise SimplicityViolationError(
                f"line {line_number}: duplicate edge ({u + offset}, {v + offset}), first seen on line {seen[key]}",
                pair=key,
                details={"line_number": line_number},
            )
        seen[key] = line_number
        pairs.append((u, v))
    if len(pairs) != m:
        raise GraphFormatError(f"header declares {m} edges but {len(pairs)} were found")
    return SimpleGraph.from_pairs(n, pairs)


def load_graph(source: BinaryIO | TextIO, fmt: GraphFormat = GraphFormat.EDGE_LIST) -> SimpleGraph:
    """Parse a graph from a byte or text stream."""
    return _parse(_read_text(source), GraphFormat(fmt))


def format_graph(g: SimpleGraph, fmt: GraphFormat = GraphFormat.EDGE_LIST) -> str:
    if GraphFormat(fmt) == GraphFormat.DIMACS:
        lines = [f"p edge {g.vertex_count} {g.edge_count}"]
        lines.extend(f"e {u + 1} {v + 1}" for u, v, _ in g.edges)
    else:
        lines = [f"{g.vertex_count} {g.edge_count}"]
        lines.extend(f"{u} {v}" for u, v, _ in g.edges)
    return "\n".join(lines) + "\n"


def write_graph(g: SimpleGraph, sink: BinaryIO | TextIO, fmt: GraphFormat = GraphFormat.EDGE_LIST) -> None:
    """Write ``g`` in input order so that loading it back yields the same edge ids."""
    text = format_graph(g, fmt)
    if isinstance(sink, io.TextIOBase):
        sink.write(text)
    else:
        sink.write(text.encode("utf-8"))


def infer_format(path: Path) -> GraphFormat:
    """DIMACS for ``.dimacs``, ``.col`` and ``.dim`` files, edge list otherwise."""
    return GraphFormat.DIMACS if path.suffix.lower() in {".dimacs", ".col", ".dim"} else GraphFormat.EDGE_LIST


def load_graph_file(path: Path, fmt: GraphFormat | None = None) -> SimpleGraph:
    path = Path(path)
    with open(path, "rb") as f:
        return load_graph(f, fmt or infer_format(path))


def write_graph_file(g: SimpleGraph, path: Path, fmt: GraphFormat | None = None) -> None:
    path = Path(path)
    with open(path, "wb") as f:
        write_graph(g, f, fmt or infer_format(path))
