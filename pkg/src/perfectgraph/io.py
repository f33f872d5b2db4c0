"""Reading and writing graphs as edge lists or DIMACS ``.col`` text.

Edge list: one ``u v`` pair per line, ``#`` starts a comment. Without an
``n <count>`` header, tokens are arbitrary names indexed by first
appearance; with the header they must be integers ``0..count-1``.

DIMACS: ``c`` comment lines, one ``p edge <n> <m>`` line, then ``m`` lines
``e <u> <v>`` with 1-based vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInputError, ParseError
from .graph import Graph

EDGE_LIST, DIMACS = "edge_list", "dimacs"
FORMATS = (EDGE_LIST, DIMACS)


@dataclass(frozen=True)
class GraphDocument:
    graph: Graph
    labels: tuple[str, ...] | None = None
    source: str | None = None

    def __post_init__(self):
        if self.labels is not None:
            if len(self.labels) != self.graph.n or len(set(self.labels)) != self.graph.n:
                raise InvalidInputError("labels must name each vertex exactly once")

    def name(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)


def guess_format(path: str) -> str:
    return DIMACS if path.endswith((".col", ".dimacs")) else EDGE_LIST


def parse_graph(data: str | bytes, format: str = EDGE_LIST, source: str | None = None) -> GraphDocument:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8 text: {exc}") from exc
    if format == EDGE_LIST:
        return _parse_edge_list(data, source)
    if format == DIMACS:
        return _parse_dimacs(data, source)
    raise InvalidInputError(f"unknown format {format!r}; expected one of {', '.join(FORMATS)}")


def _int(tok: str, lineno: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {tok!r}", lineno) from None


class _EdgeSet:
    def __init__(self):
        self.edges: list[tuple[int, int]] = []
        self.seen: set[tuple[int, int]] = set()

    def add(self, u: int, v: int, lineno: int, shown: tuple[str, str]) -> None:
        if u == v:
            raise InvalidInputError(f"line {lineno}: self-loop at vertex {shown[0]}")
        key = (min(u, v), max(u, v))
        if key in self.seen:
            raise ParseError(f"duplicate edge {shown[0]}-{shown[1]}", lineno)
        self.seen.add(key)
        self.edges.append(key)


def _parse_edge_list(text: str, source: str | None) -> GraphDocument:
    declared: int | None = None
    names: dict[str, int] = {}
    es = _EdgeSet()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if toks[0] == "n":
            if len(toks) != 2:
                raise ParseError("header must read 'n <count>'", lineno)
            if declared is not None or es.edges or names:
                raise ParseError("the 'n' header must come first and only once", lineno)
            declared = _int(toks[1], lineno, "vertex count")
            if declared < 0:
                raise ParseError("vertex count must be nonnegative", lineno)
            continue
        if len(toks) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        if declared is not None:
            u, v = (_int(t, lineno, "vertex") for t in toks)
            for x in (u, v):
                if not 0 <= x < declared:
                    raise ParseError(f"vertex {x} outside 0..{declared - 1}", lineno)
        else:
            u, v = (names.setdefault(t, len(names)) for t in toks)
        es.add(u, v, lineno, (toks[0], toks[1]))
    if declared is not None:
        return GraphDocument(Graph.from_edges(declared, es.edges), None, source)
    labels = tuple(names)
    return GraphDocument(Graph.from_edges(len(labels), es.edges), labels, source)


def _parse_dimacs(text: str, source: str | None) -> GraphDocument:
    n: int | None = None
    m_declared = 0
    es = _EdgeSet()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        toks = line.split()
        if toks[0] == "p":
            if n is not None:
                raise ParseError("second 'p' line", lineno)
            if len(toks) != 4 or toks[1] not in ("edge", "col"):
                raise ParseError("problem line must read 'p edge <n> <m>'", lineno)
            n = _int(toks[2], lineno, "vertex count")
            m_declared = _int(toks[3], lineno, "edge count")
            if n < 0 or m_declared < 0:
                raise ParseError("counts must be nonnegative", lineno)
            continue
        if toks[0] == "e":
            if n is None:
                raise ParseError("edge line before the 'p' line", lineno)
            if len(toks) != 3:
                raise ParseError("edge line must read 'e <u> <v>'", lineno)
            u, v = (_int(t, lineno, "vertex") for t in toks[1:])
            for x in (u, v):
                if not 1 <= x <= n:
                    raise ParseError(f"vertex {x} outside 1..{n}", lineno)
            es.add(u - 1, v - 1, lineno, (toks[1], toks[2]))
            continue
        raise ParseError(f"unrecognised line {line!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge <n> <m>' line")
    if len(es.edges) != m_declared:
        raise ParseError(f"'p' line declares {m_declared} edges but {len(es.edges)} were given")
    labels = tuple(str(i + 1) for i in range(n))  # report vertices as the file numbers them
    return GraphDocument(Graph.from_edges(n, es.edges), labels, source)


def emit(g: Graph, format: str = EDGE_LIST) -> str:
    if format == EDGE_LIST:
        return "".join([f"n {g.n}\n"] + [f"{u} {v}\n" for u, v in g.edges()])
    if format == DIMACS:
        return "".join([f"p edge {g.n} {g.m}\n"] + [f"e {u + 1} {v + 1}\n" for u, v in g.edges()])
    raise InvalidInputError(f"unknown format {format!r}; expected one of {', '.join(FORMATS)}")


def read_graph(path: str, format: str | None = None) -> GraphDocument:
    with open(path, "rb") as fh:
        data = fh.read()
    return parse_graph(data, format or guess_format(path), source=path)
