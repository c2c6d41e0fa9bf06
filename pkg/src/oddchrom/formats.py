"""Graph file formats: DIMACS .col and a plain 0-based edge list.

DIMACS dialect: optional `c <comment>` lines, exactly one `p edge <n> <m>`
line, then `e <u> <v>` lines with 1-based endpoints.  The parser rejects
self-loops, duplicate edges (in either orientation), out-of-range
endpoints and malformed lines, always naming the offending line number.
The writer emits edges with u < v in ascending lexicographic order, so
output is byte-for-byte reproducible.

Edge list dialect: one `u v` pair per line, 0-based, `#` comments.  The
writer prefixes `# vertices: n`, which the parser honors; without it the
vertex count falls back to max index + 1, so trailing isolated vertices
need the header to survive a round trip.
"""

from __future__ import annotations

from pathlib import Path

from .graphs import Graph, graph_from_edges


class FormatError(ValueError):
    """Malformed graph file; carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_dimacs(text: str) -> Graph:
    vertex_count: int | None = None
    declared_edges: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if vertex_count is not None:
                raise FormatError("duplicate problem line", lineno)
            if len(fields) != 4 or fields[1] != "edge":
                raise FormatError("problem line must be 'p edge <n> <m>'", lineno)
            try:
                vertex_count, declared_edges = int(fields[2]), int(fields[3])
            except ValueError:
                raise FormatError("problem line counts must be integers", lineno) from None
            if vertex_count < 0 or declared_edges < 0:
                raise FormatError("problem line counts must be nonnegative", lineno)
        elif fields[0] == "e":
            if vertex_count is None:
                raise FormatError("edge before problem line", lineno)
            if len(fields) != 3:
                raise FormatError("edge line must be 'e <u> <v>'", lineno)
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise FormatError("edge endpoints must be integers", lineno) from None
            if not (1 <= u <= vertex_count and 1 <= v <= vertex_count):
                raise FormatError(f"endpoint out of range 1..{vertex_count}", lineno)
            if u == v:
                raise FormatError("self-loop", lineno)
            key = (min(u, v) - 1, max(u, v) - 1)
            if key in seen:
                raise FormatError(f"duplicate edge ({u},{v})", lineno)
            seen.add(key)
            edges.append(key)
        else:
            raise FormatError(f"unknown line type {fields[0]!r}", lineno)
    if vertex_count is None:
        raise FormatError("missing problem line")
    if declared_edges != len(edges):
        raise FormatError(f"problem line declares {declared_edges} edges, file has {len(edges)}")
    return graph_from_edges(vertex_count, edges)


def format_dimacs(g: Graph, comments: tuple[str, ...] = ()) -> str:
    lines = [f"c {comment}" for comment in comments]
    lines.append(f"p edge {g.vertex_count} {g.edge_count}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    declared: int | None = None
    top = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("vertices:"):
                try:
                    declared = int(body.split(":", 1)[1])
                except ValueError:
                    raise FormatError("bad vertices header", lineno) from None
            continue
        fields = line.split()
        if len(fields) != 2:
            raise FormatError("expected 'u v'", lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise FormatError("endpoints must be integers", lineno) from None
        if u < 0 or v < 0:
            raise FormatError("endpoints must be nonnegative", lineno)
        if u == v:
            raise FormatError("self-loop", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"duplicate edge ({u},{v})", lineno)
        seen.add(key)
        edges.append(key)
        top = max(top, u, v)
    vertex_count = declared if declared is not None else top + 1
    if top >= vertex_count:
        raise FormatError(f"vertex {top} outside declared count {vertex_count}")
    return graph_from_edges(vertex_count, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"# vertices: {g.vertex_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def _detect_format(path: str | Path) -> str:
    return "dimacs" if str(path).endswith(".col") else "edgelist"


def read_graph(path: str | Path, fmt: str | None = None) -> Graph:
    """Read a graph file; format from the extension (.col means DIMACS) unless given."""
    fmt = fmt or _detect_format(path)
    text = Path(path).read_text()
    if fmt == "dimacs":
        return parse_dimacs(text)
    if fmt == "edgelist":
        return parse_edge_list(text)
    raise ValueError(f"unknown format {fmt!r}")


def write_graph(
    g: Graph, path: str | Path, fmt: str | None = None, comments: tuple[str, ...] = ()
) -> None:
    fmt = fmt or _detect_format(path)
    if fmt == "dimacs":
        Path(path).write_text(format_dimacs(g, comments))
    elif fmt == "edgelist":
        Path(path).write_text(format_edge_list(g))
    else:
        raise ValueError(f"unknown format {fmt!r}")
