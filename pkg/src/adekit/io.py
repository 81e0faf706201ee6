"""Text formats for matrices and graphs, and JSON shapes for reports.

Matrix format: a header line ``m n`` followed by m rows of n non-negative
integers.  Graph format: a header line ``n`` followed by ``u v`` edge lines
with 0-based endpoints.  Blank lines and lines starting with ``#`` are
ignored in both.
"""
from __future__ import annotations

from pathlib import Path

import numpy as np

from .graphs import Graph, NotSmall


class FormatError(ValueError):
    pass


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line.split()


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def parse_matrix(text: str) -> np.ndarray:
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("empty matrix file")
    lineno, head = lines[0]
    dims = _ints(head, lineno)
    if len(dims) != 2 or min(dims) < 1:
        raise FormatError(f"line {lineno}: header must be 'm n' with positive m, n")
    m, n = dims
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"expected {m} rows, found {len(body)}")
    rows = []
    for r, (lineno, tokens) in enumerate(body, 1):
        vals = _ints(tokens, lineno)
        if len(vals) != n:
            raise FormatError(f"row {r} has {len(vals)} entries, expected {n}")
        if any(v < 0 for v in vals):
            raise FormatError(f"line {lineno}: negative entry in row {r}")
        rows.append(vals)
    return np.array(rows, dtype=np.int64)


def parse_graph(text: str) -> Graph:
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("empty graph file")
    lineno, head = lines[0]
    hv = _ints(head, lineno)
    if len(hv) != 1 or hv[0] < 0:
        raise FormatError(f"line {lineno}: header must be a vertex count")
    n = hv[0]
    A = np.zeros((n, n), dtype=np.int64)
    for lineno, tokens in lines[1:]:
        e = _ints(tokens, lineno)
        if len(e) != 2:
            raise FormatError(f"line {lineno}: an edge needs two endpoints")
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"line {lineno}: edge ({u}, {v}) out of range for {n} vertices")
        if u == v:
            raise FormatError(f"loop at vertex {u}")
        if A[u, v]:
            raise FormatError(f"line {lineno}: duplicate edge ({u}, {v})")
        A[u, v] = A[v, u] = 1
    return Graph(A)


def parse_matrix_file(path) -> np.ndarray:
    return parse_matrix(Path(path).read_text(encoding="utf-8"))


def parse_graph_file(path) -> Graph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def sniff_format(text: str) -> str:
    """'matrix' if the header has two fields, 'graph' if it has one."""
    for _, tokens in _content_lines(text):
        return "matrix" if len(tokens) == 2 else "graph"
    raise FormatError("empty input")


def format_matrix(B) -> str:
    B = np.asarray(B)
    lines = [f"{B.shape[0]} {B.shape[1]}"]
    lines += [" ".join(str(int(x)) for x in row) for row in B]
    return "\n".join(lines) + "\n"


def format_graph(G: Graph) -> str:
    lines = [str(G.n)] + [f"{u} {v}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def classification_to_dict(result) -> dict:
    if isinstance(result, NotSmall):
        witness = result.witness.to_dict() if result.witness else {"kind": result.reason, "vertices": []}
        return {"small": False, "components": [], "witness": witness}
    return {"small": True, "components": [c.to_dict() for c in result], "witness": None}
