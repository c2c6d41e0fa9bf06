"""Short odd cycle detection and sphere independence checks.

A graph has no odd cycle of length at most 2k-1 exactly when, for every
vertex v and every radius 1 <= r < k, the sphere of radius r around v is
an independent set.  Both sides of that equivalence are implemented
here: an exact shortest-odd-cycle search by BFS layering, and a direct
sphere scan that reports the first violating edge in a fixed order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import Coloring, Graph


@dataclass(frozen=True)
class OddCycleCertificate:
    """Closed walk of odd length; consecutive vertices (cyclically) are adjacent."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def is_valid(self, g: Graph) -> bool:
        seq = self.vertices
        if len(seq) < 3 or len(seq) % 2 == 0:
            return False
        return all(g.has_edge(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq)))


@dataclass(frozen=True)
class SphereViolation:
    """An edge whose endpoints both lie at distance `radius` from `center`."""

    center: int
    radius: int
    edge: tuple[int, int]


class SphereIndependenceError(ValueError):
    """Raised when an operation requires independent spheres but the input has none."""

    def __init__(self, violation: SphereViolation):
        self.violation = violation
        super().__init__(
            f"sphere of radius {violation.radius} around vertex {violation.center} "
            f"contains edge {violation.edge}"
        )


def _bfs_tree(g: Graph, root: int) -> tuple[list[int | None], list[int]]:
    """Distances and BFS parents from root; neighbor scan order is ascending."""
    dist: list[int | None] = [None] * g.vertex_count
    parent = [-1] * g.vertex_count
    dist[root] = 0
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if dist[y] is None:
                dist[y] = dist[x] + 1
                parent[y] = x
                queue.append(y)
    return dist, parent


def _closed_walk(root: int, x: int, y: int, parent: list[int]) -> tuple[int, ...]:
    """Closed odd walk root..x, edge (x,y), y..root built from BFS parents."""
    path_x = [x]
    while path_x[-1] != root:
        path_x.append(parent[path_x[-1]])
    path_x.reverse()
    path_y = [y]
    while path_y[-1] != root:
        path_y.append(parent[path_y[-1]])
    return tuple(path_x + path_y[:-1])


def bipartite_2_coloring(g: Graph) -> Coloring | OddCycleCertificate:
    """Proper 2-coloring by BFS parity, or an explicit odd closed walk.

    Edgeless graphs come back as 1-colorings (0 colors for the empty
    graph); component roots are taken in ascending order with color 0.
    """
    color: list[int] = [-1] * g.vertex_count
    for root in range(g.vertex_count):
        if color[root] != -1:
            continue
        dist, parent = _bfs_tree(g, root)
        for v, d in enumerate(dist):
            if d is not None:
                color[v] = d % 2
        for x in range(g.vertex_count):
            if dist[x] is None:
                continue
            for y in g.adjacency[x]:
                if y > x and dist[y] == dist[x]:
                    return OddCycleCertificate(_closed_walk(root, x, y, parent))
    if g.vertex_count == 0:
        return Coloring((), 0)
    num_colors = 2 if any(c == 1 for c in color) else 1
    return Coloring(tuple(color), num_colors)


def shortest_odd_cycle(g: Graph) -> OddCycleCertificate | None:
    """Minimum-length odd cycle, or None when every component is bipartite.

    BFS from each vertex; an edge inside one BFS layer at depth t closes
    an odd walk of length 2t+1, and the minimum of those over all roots
    is exactly the odd girth.  Ties break toward the smallest root, so
    the result is independent of any parallel evaluation order.
    """
    best: tuple[int, int, int, int, list[int]] | None = None  # (length, root, x, y, parent)
    for root in range(g.vertex_count):
        dist, parent = _bfs_tree(g, root)
        local: tuple[int, int, int] | None = None  # (layer, x, y)
        for x in range(g.vertex_count):
            dx = dist[x]
            if dx is None:
                continue
            for y in g.adjacency[x]:
                if y > x and dist[y] == dx:
                    if local is None or (dx, x, y) < local:
                        local = (dx, x, y)
        if local is not None:
            length = 2 * local[0] + 1
            if best is None or length < best[0]:
                best = (length, root, local[1], local[2], parent)
    if best is None:
        return None
    _, root, x, y, parent = best
    return OddCycleCertificate(_closed_walk(root, x, y, parent))


def check_sphere_independence(g: Graph, k: int) -> SphereViolation | None:
    """First edge inside a sphere of radius 1 <= r < k, or None if all spheres are independent.

    Scan order is deterministic: center ascending, then radius ascending,
    then edge endpoints ascending.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    for v in range(g.vertex_count):
        dist, _ = _bfs_tree(g, v)
        found: tuple[int, int, int] | None = None
        for x in range(g.vertex_count):
            dx = dist[x]
            if dx is None or not 1 <= dx < k:
                continue
            for y in g.adjacency[x]:
                if y > x and dist[y] == dx:
                    if found is None or (dx, x, y) < found:
                        found = (dx, x, y)
        if found is not None:
            r, x, y = found
            return SphereViolation(center=v, radius=r, edge=(x, y))
    return None


def odd_girth_at_least(g: Graph, threshold: int) -> bool:
    """True when every odd cycle has length >= threshold (bipartite passes all thresholds)."""
    if threshold < 3 or threshold % 2 == 0:
        raise ValueError("threshold must be an odd integer >= 3")
    cert = shortest_odd_cycle(g)
    return cert is None or cert.length >= threshold


def odd_cycle_from_violation(g: Graph, violation: SphereViolation) -> OddCycleCertificate:
    """Expand a sphere violation into an odd closed walk of length 2*radius + 1."""
    dist, parent = _bfs_tree(g, violation.center)
    x, y = violation.edge
    if dist[x] != violation.radius or dist[y] != violation.radius:
        raise ValueError("violation does not match the graph")
    return OddCycleCertificate(_closed_walk(violation.center, x, y, parent))
