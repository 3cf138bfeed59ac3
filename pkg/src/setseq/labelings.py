"""Labelings of graphs by GF(2) vectors, the validity checker, and the
even-degree obstruction test.

A labeling assigns one vector to every vertex and every edge.  It is
*valid* (set-sequential) when all labels are nonzero and pairwise
distinct, every edge label is the XOR of its endpoints' labels, and
|V| + |E| = 2**dim - 1 so the labels exhaust the nonzero vectors.

The checker reports the FIRST violated clause in a fixed order
(zero, duplicate, edge-sum, size) so failures are stable test targets.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph
from .vectors import GF2Vector, xor


@dataclass(frozen=True)
class Labeling:
    """Vertex and edge labels of one graph; edge_labels is parallel to
    the graph's edge list."""

    dim: int
    vertex_labels: tuple[GF2Vector, ...]
    edge_labels: tuple[GF2Vector, ...]

    def __post_init__(self) -> None:
        for v in self.vertex_labels + self.edge_labels:
            if v.dim != self.dim:
                raise ValueError(f"label {v} has dimension {v.dim}, expected {self.dim}")

    def all_labels(self) -> tuple[GF2Vector, ...]:
        return self.vertex_labels + self.edge_labels


class Clause(enum.Enum):
    ZERO = "zero-label"
    DUPLICATE = "duplicate-label"
    EDGE_SUM = "edge-sum-mismatch"
    SIZE = "size-mismatch"


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    clause: Clause | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def derive_edge_labels(g: Graph, vertex_labels: tuple[GF2Vector, ...] | list[GF2Vector]) -> Labeling:
    """Label every edge with the XOR of its endpoints.

    Distinctness and nonzeroness are NOT checked here; that is verify's job.
    """
    vls = tuple(vertex_labels)
    if len(vls) != g.num_vertices:
        raise ValueError("vertex label count does not match graph")
    if vls:
        dim = vls[0].dim
        if any(v.dim != dim for v in vls):
            raise ValueError("vertex labels have mixed dimensions")
    else:
        raise ValueError("empty vertex labeling")
    els = tuple(xor(vls[u], vls[v]) for u, v in g.edges)
    return Labeling(dim, vls, els)


def verify(g: Graph, lab: Labeling) -> VerifyReport:
    """Check set-sequential validity; report the first violated clause."""
    if len(lab.vertex_labels) != g.num_vertices or len(lab.edge_labels) != g.num_edges:
        raise ValueError("labeling does not cover exactly the graph's vertices and edges")

    for i, v in enumerate(lab.vertex_labels):
        if v.is_zero:
            return VerifyReport(False, Clause.ZERO, f"vertex {i} labeled zero")
    for i, v in enumerate(lab.edge_labels):
        if v.is_zero:
            return VerifyReport(False, Clause.ZERO, f"edge {g.edges[i]} labeled zero")

    seen: dict[GF2Vector, str] = {}
    for i, v in enumerate(lab.vertex_labels):
        if v in seen:
            return VerifyReport(False, Clause.DUPLICATE, f"label {v} on vertex {i} and {seen[v]}")
        seen[v] = f"vertex {i}"
    for i, v in enumerate(lab.edge_labels):
        if v in seen:
            return VerifyReport(
                False, Clause.DUPLICATE, f"label {v} on edge {g.edges[i]} and {seen[v]}"
            )
        seen[v] = f"edge {g.edges[i]}"

    for i, (u, w) in enumerate(g.edges):
        forced = xor(lab.vertex_labels[u], lab.vertex_labels[w])
        if lab.edge_labels[i] != forced:
            return VerifyReport(
                False,
                Clause.EDGE_SUM,
                f"edge {(u, w)} labeled {lab.edge_labels[i]}, endpoints force {forced}",
            )

    if g.num_vertices + g.num_edges != (1 << lab.dim) - 1:
        return VerifyReport(
            False,
            Clause.SIZE,
            f"|V|+|E| = {g.num_vertices + g.num_edges} != 2^{lab.dim}-1",
        )
    return VerifyReport(True)


class ObstructionCase(enum.Enum):
    ONE_OR_TWO_EVEN = 1
    THREE_EVEN_TWO_ADJACENT = 2
    FOUR_EVEN_TWO_DISJOINT_EDGES = 3


@dataclass(frozen=True)
class ObstructionVerdict:
    blocked: bool
    case: ObstructionCase | None = None


def hegde_obstruction(g: Graph) -> ObstructionVerdict:
    """Even-degree obstruction test.

    Returns Blocked when the even-degree vertices match one of the three
    known forbidden patterns: (1) exactly one or two of them; (2) exactly
    three with some two adjacent; (3) exactly four spanned by two disjoint
    edges.  Otherwise Unknown (not blocked).
    """
    if g.num_vertices <= 2:
        raise ValueError("obstruction test requires more than 2 vertices")
    even = [i for i, d in enumerate(g.degrees()) if d % 2 == 0]
    edge_set = set(g.edges)

    def adjacent(a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in edge_set

    if len(even) in (1, 2):
        return ObstructionVerdict(True, ObstructionCase.ONE_OR_TWO_EVEN)
    if len(even) == 3:
        if any(adjacent(a, b) for a, b in combinations(even, 2)):
            return ObstructionVerdict(True, ObstructionCase.THREE_EVEN_TWO_ADJACENT)
    if len(even) == 4:
        a, b, c, d = even
        pairings = [((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))]
        for (p1, p2), (q1, q2) in pairings:
            if adjacent(p1, p2) and adjacent(q1, q2):
                return ObstructionVerdict(True, ObstructionCase.FOUR_EVEN_TWO_DISJOINT_EDGES)
    return ObstructionVerdict(False)


def xor_of_all_labels(lab: Labeling) -> GF2Vector:
    """XOR over every vertex and edge label; zero for any valid labeling."""
    acc = GF2Vector(lab.dim, 0)
    for v in lab.all_labels():
        acc = xor(acc, v)
    return acc
