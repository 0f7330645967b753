"""Plain-text signed graph files.

Format::

    # comment
    n m
    u v s        (m lines, s is + or -)

Blank lines and ``#`` comments (whole-line or trailing) are ignored.
"""
from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .core import GraphError, SignedGraph, from_edge_list


class GraphFileError(GraphError):
    def __init__(self, message: str, line: int | None = None, source: str = "<input>"):
        self.line = line
        self.source = source
        where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)


def _content_lines(lines: Iterable[str]):
    for number, raw in enumerate(lines, start=1):
        text = raw.split("#", 1)[0].strip()
        if text:
            yield number, text


def parse_graph(text: str, source: str = "<input>") -> SignedGraph:
    rows = list(_content_lines(text.splitlines()))
    if not rows:
        raise GraphFileError("missing header line 'n m'", None, source)
    line, header = rows[0]
    fields = header.split()
    if len(fields) != 2:
        raise GraphFileError(f"header must be 'n m', got {header!r}", line, source)
    try:
        n, m = (int(f) for f in fields)
    except ValueError:
        raise GraphFileError(f"header must hold two integers, got {header!r}", line, source) from None
    if n < 0 or m < 0:
        raise GraphFileError("negative count in header", line, source)
    body = rows[1:]
    if len(body) != m:
        last = body[-1][0] if body else line
        raise GraphFileError(f"header declares {m} edges, found {len(body)}", last, source)
    triples = []
    for line, row in body:
        parts = row.split()
        if len(parts) != 3:
            raise GraphFileError(f"edge line must be 'u v s', got {row!r}", line, source)
        u, v, s = parts
        if s not in ("+", "-"):
            raise GraphFileError(f"sign must be '+' or '-', got {s!r}", line, source)
        try:
            triple = (int(u), int(v), s)
        except ValueError:
            raise GraphFileError(f"vertices must be integers, got {row!r}", line, source) from None
        try:
            # validate incrementally so the error carries this line number
            from_edge_list(n, [*triples, triple])
        except GraphError as exc:
            raise GraphFileError(str(exc), line, source) from None
        triples.append(triple)
    return from_edge_list(n, triples)


def read_graph(path: str | Path) -> SignedGraph:
    path = Path(path)
    return parse_graph(path.read_text(), str(path))


def format_graph(g: SignedGraph) -> str:
    lines = [f"{g.order} {g.num_edges}"]
    lines += [f"{u} {v} {'+' if s > 0 else '-'}" for u, v, s in g.edges]
    return "\n".join(lines) + "\n"


def write_graph(g: SignedGraph, path: str | Path) -> None:
    Path(path).write_text(format_graph(g))
