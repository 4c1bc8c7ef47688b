"""Plain-text graph files.

Format: ``#`` starts a comment line; the first data line is ``n m``; then one
``u v`` pair per line with 0-based labels. Digraph files use the same layout
with arcs ``u -> v``.
"""

from __future__ import annotations

import warnings
from pathlib import Path
from typing import Iterable

from .graph import Digraph, Graph


class GraphFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def _read_pairs(text: str) -> tuple[int, int, list[tuple[int, int, int]]]:
    header = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise GraphFormatError(f"expected two integers, got {raw!r}", lineno)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError(f"expected two integers, got {raw!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise GraphFormatError("n and m must be non-negative", lineno)
            header = (a, b)
            continue
        n = header[0]
        if not (0 <= a < n and 0 <= b < n):
            raise GraphFormatError(f"vertex out of range 0..{n - 1}: {raw!r}", lineno)
        if a == b:
            raise GraphFormatError(f"self-loop {raw!r}", lineno)
        pairs.append((a, b, lineno))
    if header is None:
        raise GraphFormatError("missing 'n m' header")
    return header[0], header[1], pairs


def parse_graph(text: str) -> Graph:
    n, m, pairs = _read_pairs(text)
    g = Graph.from_edges(n, [(a, b) for a, b, _ in pairs])
    if len(pairs) != m:
        warnings.warn(f"header declares m={m} but {len(pairs)} edge lines were read", stacklevel=2)
    if g.m != len(pairs):
        warnings.warn(f"{len(pairs) - g.m} duplicate edges collapsed; graph has m={g.m}", stacklevel=2)
    return g


def parse_graph_file(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def parse_digraph(text: str) -> Digraph:
    n, m, pairs = _read_pairs(text)
    d = Digraph.from_arcs(n, [(a, b) for a, b, _ in pairs])
    if len(pairs) != m:
        warnings.warn(f"header declares m={m} but {len(pairs)} arc lines were read", stacklevel=2)
    return d


def parse_digraph_file(path: str | Path) -> Digraph:
    return parse_digraph(Path(path).read_text())


def format_graph(n: int, edges: Iterable[tuple[int, int]], comment: str | None = None) -> str:
    edges = sorted(edges)
    lines = [f"# {comment}"] if comment else []
    lines.append(f"{n} {len(edges)}")
    lines += [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"
