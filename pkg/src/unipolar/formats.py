"""Graph file formats used by the command line: DIMACS and plain edge lists.

DIMACS: comment lines start with ``c``, one header ``p edge <n> <m>``, then
edge lines ``e <u> <v>`` with 1-based vertices. Edge list: first
non-comment line is the vertex count, then ``<u> <v>`` pairs, 0-based,
``#`` comments allowed. Parsers report the offending line number.
"""

from __future__ import annotations

from .graphs import Graph, graph_from_edges

__all__ = [
    "ParseError",
    "parse_dimacs",
    "serialize_dimacs",
    "parse_edgelist",
    "serialize_edgelist",
    "parse_graph",
    "serialize_graph",
    "FORMATS",
]

FORMATS = ("dimacs", "edgelist")


class ParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_dimacs(text: str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise ParseError(line_no, "duplicate problem line")
            if len(fields) != 4 or fields[1] != "edge":
                raise ParseError(line_no, f"expected 'p edge <n> <m>', got {line!r}")
            try:
                n = int(fields[2])
                int(fields[3])
            except ValueError:
                raise ParseError(line_no, f"non-integer counts in {line!r}") from None
            if n < 0:
                raise ParseError(line_no, "negative vertex count")
        elif fields[0] == "e":
            if n is None:
                raise ParseError(line_no, "edge before the problem line")
            if len(fields) != 3:
                raise ParseError(line_no, f"expected 'e <u> <v>', got {line!r}")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError(line_no, f"non-integer endpoint in {line!r}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(line_no, f"vertex out of range 1..{n} in {line!r}")
            if u == v:
                raise ParseError(line_no, f"self-loop in {line!r}")
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(line_no, f"unrecognised line {line!r}")
    if n is None:
        raise ParseError(1, "missing 'p edge <n> <m>' line")
    return graph_from_edges(n, edges)


def serialize_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.edge_count}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise ParseError(line_no, f"expected the vertex count, got {line!r}")
            try:
                n = int(fields[0])
            except ValueError:
                raise ParseError(line_no, f"non-integer vertex count {line!r}") from None
            if n < 0:
                raise ParseError(line_no, "negative vertex count")
            continue
        if len(fields) != 2:
            raise ParseError(line_no, f"expected '<u> <v>', got {line!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(line_no, f"non-integer endpoint in {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(line_no, f"vertex out of range 0..{n - 1} in {line!r}")
        if u == v:
            raise ParseError(line_no, f"self-loop in {line!r}")
        edges.append((u, v))
    if n is None:
        raise ParseError(1, "empty input, expected a vertex count")
    return graph_from_edges(n, edges)


def serialize_edgelist(g: Graph) -> str:
    lines = [str(g.n)]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_graph(text: str, fmt: str) -> Graph:
    if fmt == "dimacs":
        return parse_dimacs(text)
    if fmt == "edgelist":
        return parse_edgelist(text)
    raise ValueError(f"unknown format {fmt!r}, expected one of {FORMATS}")


def serialize_graph(g: Graph, fmt: str) -> str:
    if fmt == "dimacs":
        return serialize_dimacs(g)
    if fmt == "edgelist":
        return serialize_edgelist(g)
    raise ValueError(f"unknown format {fmt!r}, expected one of {FORMATS}")
