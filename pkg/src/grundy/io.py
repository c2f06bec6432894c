"""Graph and coloring file formats.

Edge-list format: one "u v" pair per line, whitespace separated, 0-indexed;
'#' starts a comment, blank lines are ignored. DIMACS coloring format:
a "p edge n m" header, then "e u v" lines, 1-indexed. Both parsers reject
self-loops and silently drop repeated edges, reporting how many.
Colorings are stored as "v color" lines, 0-indexed.
"""

from __future__ import annotations

from typing import Iterable

from .exceptions import GraphParseError
from .graph import Graph
from .oracle import GrundyColoring


def _iter_lines(text: str) -> Iterable[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_edge_list(text: str) -> tuple[Graph, int]:
    """Parse edge-list text. Returns (graph, duplicate_edges_ignored)."""
    edges: set[tuple[int, int]] = set()
    duplicates = 0
    top = -1
    for lineno, line in _iter_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"expected 'u v', got {line!r}", line=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"non-integer vertex in {line!r}", line=lineno)
        if u < 0 or v < 0:
            raise GraphParseError("vertex ids must be >= 0", line=lineno)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", line=lineno)
        top = max(top, u, v)
        key = (min(u, v), max(u, v))
        if key in edges:
            duplicates += 1
        else:
            edges.add(key)
    return Graph(top + 1, sorted(edges)), duplicates


def parse_dimacs(text: str) -> tuple[Graph, int]:
    """Parse DIMACS coloring text. Returns (graph, duplicate_edges_ignored)."""
    n = None
    edges: set[tuple[int, int]] = set()
    duplicates = 0
    for lineno, line in _iter_lines(text):
        parts = line.split()
        tag = parts[0]
        if tag == "c":
            continue
        if tag == "p":
            if n is not None:
                raise GraphParseError("duplicate problem line", line=lineno)
            if len(parts) < 3:
                raise GraphParseError("problem line needs 'p edge n m'", line=lineno)
            try:
                n = int(parts[2])
            except ValueError:
                raise GraphParseError("vertex count must be an integer", line=lineno)
            if n < 0:
                raise GraphParseError("vertex count must be >= 0", line=lineno)
        elif tag == "e":
            if n is None:
                raise GraphParseError("edge before problem line", line=lineno)
            if len(parts) != 3:
                raise GraphParseError(f"expected 'e u v', got {line!r}", line=lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphParseError(f"non-integer vertex in {line!r}", line=lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphParseError(f"vertex out of range 1..{n}", line=lineno)
            if u == v:
                raise GraphParseError(f"self-loop at vertex {u}", line=lineno)
            key = (min(u, v) - 1, max(u, v) - 1)
            if key in edges:
                duplicates += 1
            else:
                edges.add(key)
        else:
            raise GraphParseError(f"unknown line type {tag!r}", line=lineno)
    if n is None:
        raise GraphParseError("missing problem line")
    return Graph(n, sorted(edges)), duplicates


def sniff_format(text: str) -> str:
    """Guess between 'dimacs' and 'edgelist' from the first content line."""
    for _, line in _iter_lines(text):
        return "dimacs" if line[0] in "pce" and not line[0].isdigit() else "edgelist"
    return "edgelist"


def load_graph_text(text: str, fmt: str = "auto") -> tuple[Graph, int]:
    if fmt == "auto":
        fmt = sniff_format(text)
    if fmt == "dimacs":
        return parse_dimacs(text)
    if fmt == "edgelist":
        return parse_edge_list(text)
    raise ValueError(f"unknown format {fmt!r}")


def load_graph(path: str, fmt: str = "auto") -> tuple[Graph, int]:
    with open(path, encoding="utf-8") as fh:
        return load_graph_text(fh.read(), fmt)


def format_edge_list(g: Graph) -> str:
    """Edge-list text for g; isolated vertices are recorded in a comment."""
    lines = [f"# n={g.n} m={g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def format_coloring(coloring: GrundyColoring) -> str:
    return "\n".join(f"{v} {c}" for v, c in enumerate(coloring.colors)) + "\n"


def parse_coloring(text: str) -> GrundyColoring:
    values: dict[int, int] = {}
    for lineno, line in _iter_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"expected 'v color', got {line!r}", line=lineno)
        try:
            v, c = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"non-integer in {line!r}", line=lineno)
        if v in values:
            raise GraphParseError(f"vertex {v} colored twice", line=lineno)
        values[v] = c
    n = max(values, default=-1) + 1
    if sorted(values) != list(range(n)):
        raise GraphParseError("coloring must cover vertices 0..n-1")
    return GrundyColoring(tuple(values[v] for v in range(n)))
