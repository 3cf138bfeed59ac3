"""Simple undirected graphs as vertex count + edge list.

Vertices are dense 0-indexed integers.  Edges are stored with the smaller
endpoint first; the edge *list order* is preserved as given (it is the
order edge labels are serialized in).  No loops, no parallel edges.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass


@dataclass(frozen=True)
class Graph:
    num_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.num_vertices < 0:
            raise ValueError("negative vertex count")
        seen = set()
        norm = []
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise ValueError(f"edge {e} out of range")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise ValueError(f"duplicate edge {(u, v)}")
            seen.add((u, v))
            norm.append((u, v))
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.num_vertices
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.num_vertices)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in set(self.edges)

    def is_connected(self) -> bool:
        if self.num_vertices == 0:
            return True
        adj = self.adjacency()
        seen = [False] * self.num_vertices
        queue = deque([0])
        seen[0] = True
        count = 1
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    count += 1
                    queue.append(y)
        return count == self.num_vertices

    def is_tree(self) -> bool:
        return self.num_edges == self.num_vertices - 1 and self.is_connected()

    def all_degrees_odd(self) -> bool:
        return all(d % 2 == 1 for d in self.degrees())


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def star_graph(n: int) -> Graph:
    """Star on n vertices, center 0."""
    return Graph(n, tuple((0, i) for i in range(1, n)))


@dataclass(frozen=True)
class Bipartition:
    """A 2-coloring: class_x and class_y partition the vertex set."""

    class_x: frozenset[int]
    class_y: frozenset[int]

    def validate(self, g: Graph) -> None:
        if self.class_x & self.class_y:
            raise ValueError("bipartition classes intersect")
        if self.class_x | self.class_y != set(range(g.num_vertices)):
            raise ValueError("bipartition does not cover the vertex set")
        for u, v in g.edges:
            if (u in self.class_x) == (v in self.class_x):
                raise ValueError(f"edge {(u, v)} inside one class")

    def side(self, v: int) -> str:
        return "x" if v in self.class_x else "y"


def bipartition_of(g: Graph) -> Bipartition:
    """2-color g by BFS; class_x is the side of vertex 0 of each component.

    Raises ValueError if g has an odd cycle.
    """
    color = [-1] * g.num_vertices
    adj = g.adjacency()
    for start in range(g.num_vertices):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if color[y] == -1:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    raise ValueError("graph is not bipartite")
    xs = frozenset(i for i, c in enumerate(color) if c == 0)
    ys = frozenset(i for i, c in enumerate(color) if c == 1)
    return Bipartition(xs, ys)
