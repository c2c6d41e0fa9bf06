"""Immutable undirected simple graphs and their BFS metric primitives.

Vertices are the integers 0..vertex_count-1.  Every operation here is a
pure function over a frozen Graph, so sharing graphs between threads is
safe.  Unreachable distances are reported as None, never as a large
integer, so distance arithmetic cannot silently overflow.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True, repr=False)
class Graph:
    """Undirected simple graph with sorted adjacency tuples.

    Invariants enforced at construction: no self-loops, no duplicate
    neighbors, symmetric adjacency, all neighbor indices in range.
    Instances are frozen; build them with :func:`graph_from_edges`.
    """

    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        if len(self.adjacency) != self.vertex_count:
            raise ValueError("adjacency length does not match vertex_count")
        for v, nbrs in enumerate(self.adjacency):
            prev = -1
            for u in nbrs:
                if not 0 <= u < self.vertex_count:
                    raise ValueError(f"neighbor {u} of vertex {v} out of range")
                if u == v:
                    raise ValueError(f"self-loop at vertex {v}")
                if u <= prev:
                    raise ValueError(f"adjacency of vertex {v} is not sorted and duplicate-free")
                prev = u
        for v, nbrs in enumerate(self.adjacency):
            for u in nbrs:
                if v not in self.adjacency[u]:
                    raise ValueError(f"edge ({v},{u}) is not symmetric")

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) with u < v, in ascending lexicographic order."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if v > u:
                    yield (u, v)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self.adjacency[u]

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise ValueError(f"vertex {v} out of range for graph on {self.vertex_count} vertices")

    def __repr__(self) -> str:
        return f"Graph(vertex_count={self.vertex_count}, edge_count={self.edge_count})"


@dataclass(frozen=True)
class Coloring:
    """Per-vertex color assignment drawn from a palette of num_colors colors.

    Properness is never assumed; check it with coloring.verify_coloring.
    """

    assignment: tuple[int, ...]
    num_colors: int

    def __post_init__(self) -> None:
        if self.num_colors < 0:
            raise ValueError("num_colors must be nonnegative")
        for v, c in enumerate(self.assignment):
            if not 0 <= c < self.num_colors:
                raise ValueError(f"color {c} of vertex {v} outside palette of {self.num_colors}")


def graph_from_edges(vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph from an edge iterable; duplicate edges collapse silently."""
    sets: list[set[int]] = [set() for _ in range(vertex_count)]
    for u, v in edges:
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise ValueError(f"edge ({u},{v}) out of range")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        sets[u].add(v)
        sets[v].add(u)
    return Graph(vertex_count, tuple(tuple(sorted(s)) for s in sets))


def distances_from(g: Graph, v: int) -> list[int | None]:
    """BFS distances from v; unreachable vertices get None."""
    g._check_vertex(v)
    dist: list[int | None] = [None] * g.vertex_count
    dist[v] = 0
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if dist[y] is None:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def ball(g: Graph, v: int, r: int) -> frozenset[int]:
    """Vertices at distance at most r from v."""
    if r < 0:
        raise ValueError("radius must be nonnegative")
    dist = distances_from(g, v)
    return frozenset(u for u, d in enumerate(dist) if d is not None and d <= r)


def sphere(g: Graph, v: int, r: int) -> frozenset[int]:
    """Vertices at distance exactly r from v."""
    if r < 0:
        raise ValueError("radius must be nonnegative")
    dist = distances_from(g, v)
    return frozenset(u for u, d in enumerate(dist) if d == r)


def outer_boundary(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """Vertices outside s adjacent to at least one vertex of s."""
    inside = set()
    for v in s:
        g._check_vertex(v)
        inside.add(v)
    out: set[int] = set()
    for v in inside:
        for u in g.adjacency[v]:
            if u not in inside:
                out.add(u)
    return frozenset(out)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by s, plus the old->new relabeling map.

    New indices follow ascending order of the old ones, which keeps
    every downstream trace deterministic.
    """
    members = sorted(set(s))
    for v in members:
        g._check_vertex(v)
    relabel = {old: new for new, old in enumerate(members)}
    adjacency = tuple(
        tuple(relabel[u] for u in g.adjacency[old] if u in relabel)
        for old in members
    )
    return Graph(len(members), adjacency), relabel
