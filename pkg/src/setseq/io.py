"""Flat-file formats for graphs and labeling certificates.

Graph file:        line 1 "n m", then m lines "u v" with 0 <= u < v < n.
Certificate file:  line 1 "dim d", then one line per vertex
                   "v <index> <bits>", then one line per edge
                   "e <u> <v> <bits>"; vertex lines sorted by index and
                   edge lines sorted by endpoint pair.

Writers emit exactly this canonical form, so save(load(path)) is
byte-identical.  A certificate is self-contained: the graph is implied
by its v/e lines.
"""

from __future__ import annotations

import hashlib
from pathlib import Path

from .graphs import Graph
from .labelings import Labeling
from .vectors import GF2Vector, parse_vector


class ParseError(ValueError):
    def __init__(self, path: str | Path, lineno: int, message: str) -> None:
        super().__init__(f"{path}:{lineno}: {message}")
        self.path = str(path)
        self.lineno = lineno


def _lines(path: str | Path) -> list[tuple[int, str]]:
    out = []
    with open(path, "r", encoding="ascii") as fh:
        for i, raw in enumerate(fh, start=1):
            line = raw.strip()
            if line:
                out.append((i, line))
    return out


def load_graph(path: str | Path) -> Graph:
    lines = _lines(path)
    if not lines:
        raise ParseError(path, 1, "empty graph file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ParseError(path, lineno, f"expected 'n m', got {header!r}")
    n, m = int(parts[0]), int(parts[1])
    if len(lines) - 1 != m:
        raise ParseError(path, lineno, f"declared {m} edges, file has {len(lines) - 1}")
    edges = []
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(path, lineno, f"expected 'u v', got {line!r}")
        u, v = int(parts[0]), int(parts[1])
        if not u < v:
            raise ParseError(path, lineno, f"edge endpoints must satisfy u < v, got {u} {v}")
        if v >= n:
            raise ParseError(path, lineno, f"endpoint {v} out of range for {n} vertices")
        edges.append((u, v))
    try:
        return Graph(n, tuple(edges))
    except ValueError as exc:
        raise ParseError(path, lines[0][0], str(exc)) from exc


def save_graph(g: Graph, path: str | Path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"{g.num_vertices} {g.num_edges}\n")
        for u, v in sorted(g.edges):
            fh.write(f"{u} {v}\n")


def load_certificate(path: str | Path) -> tuple[Graph, Labeling]:
    lines = _lines(path)
    if not lines:
        raise ParseError(path, 1, "empty certificate file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "dim" or not parts[1].isdigit():
        raise ParseError(path, lineno, f"expected 'dim d', got {header!r}")
    dim = int(parts[1])
    if dim < 1:
        raise ParseError(path, lineno, "dimension must be positive")

    vlabels: dict[int, GF2Vector] = {}
    elabels: dict[tuple[int, int], GF2Vector] = {}
    for lineno, line in lines[1:]:
        parts = line.split()
        try:
            if parts[0] == "v" and len(parts) == 3:
                idx = int(parts[1])
                vec = parse_vector(parts[2])
                if idx in vlabels:
                    raise ValueError(f"vertex {idx} labeled twice")
                vlabels[idx] = vec
            elif parts[0] == "e" and len(parts) == 4:
                u, v = int(parts[1]), int(parts[2])
                if not u < v:
                    raise ValueError(f"edge endpoints must satisfy u < v, got {u} {v}")
                vec = parse_vector(parts[3])
                if (u, v) in elabels:
                    raise ValueError(f"edge ({u}, {v}) labeled twice")
                elabels[(u, v)] = vec
            else:
                raise ValueError(f"unrecognized line {line!r}")
            if vec.dim != dim:
                raise ValueError(f"label {vec} does not have dimension {dim}")
        except ValueError as exc:
            raise ParseError(path, lineno, str(exc)) from exc

    n = len(vlabels)
    if sorted(vlabels) != list(range(n)):
        raise ParseError(path, lines[0][0], "vertex indices are not 0..n-1")
    edges = sorted(elabels)
    try:
        g = Graph(n, tuple(edges))
    except ValueError as exc:
        raise ParseError(path, lines[0][0], str(exc)) from exc
    lab = Labeling(dim, tuple(vlabels[i] for i in range(n)), tuple(elabels[e] for e in edges))
    return g, lab


def save_certificate(g: Graph, lab: Labeling, path: str | Path) -> None:
    order = sorted(range(g.num_edges), key=lambda i: g.edges[i])
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"dim {lab.dim}\n")
        for i, v in enumerate(lab.vertex_labels):
            fh.write(f"v {i} {v}\n")
        for i in order:
            u, w = g.edges[i]
            fh.write(f"e {u} {w} {lab.edge_labels[i]}\n")


def sha256_of(path: str | Path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(65536), b""):
            h.update(chunk)
    return h.hexdigest()
