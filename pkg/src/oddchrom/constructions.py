"""Witness graph generators: cycles, Schrijver graphs, Mycielski extensions."""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .graphs import Graph, graph_from_edges

DEFAULT_VERTEX_CAP = 100_000


def _vertex_cap() -> int:
    return int(os.environ.get("ODDCHROM_MAX_VERTICES", DEFAULT_VERTEX_CAP))


@dataclass(frozen=True)
class SchrijverParams:
    """Subset size m and chromatic offset d of a Schrijver graph."""

    m: int
    d: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.d < 1:
            raise ValueError("m and d must be positive")


def cycle_graph(length: int) -> Graph:
    """Cycle on `length` >= 3 vertices."""
    if length < 3:
        raise ValueError("cycle length must be at least 3")
    return graph_from_edges(length, [(i, (i + 1) % length) for i in range(length)])


def predicted_schrijver_properties(p: SchrijverParams) -> tuple[int, int, int]:
    """(vertex count, chromatic number, odd girth lower bound) for given parameters.

    The vertex count is (2m+d)/(m+d) * C(m+d, d), the chromatic number is
    d+2, and every odd cycle has length at least (2m+d)/d, reported as
    the smallest odd integer at or above that ratio.
    """
    m, d = p.m, p.d
    numerator = (2 * m + d) * comb(m + d, d)
    if numerator % (m + d) != 0:
        raise AssertionError("vertex count formula did not divide evenly")
    count = numerator // (m + d)
    girth_bound = -(-(2 * m + d) // d)  # ceiling
    if girth_bound % 2 == 0:
        girth_bound += 1
    return count, d + 2, girth_bound


def schrijver_vertices(p: SchrijverParams) -> list[tuple[int, ...]]:
    """Stable m-subsets of {1..2m+d}: no two chosen points circularly adjacent.

    Concretely: every pair i < j in the subset satisfies 1 < j-i < 2m+d-1,
    which rules out consecutive points and the wrap-around pair {1, 2m+d}.
    Enumeration is lexicographic.
    """
    m, d = p.m, p.d
    points = 2 * m + d
    out = []
    for combo in combinations(range(1, points + 1), m):
        ok = True
        for a, b in combinations(combo, 2):
            gap = b - a
            if not 1 < gap < points - 1:
                ok = False
                break
        if ok:
            out.append(combo)
    return out


def schrijver_graph(p: SchrijverParams, max_vertices: int | None = None) -> tuple[Graph, list[tuple[int, ...]]]:
    """Schrijver graph plus its vertex labels (the underlying m-subsets).

    Vertices are stable m-subsets; edges join disjoint subsets.  The
    built vertex count is asserted against the closed-form count.
    """
    cap = _vertex_cap() if max_vertices is None else max_vertices
    expected, _, _ = predicted_schrijver_properties(p)
    if expected > cap:
        raise ValueError(f"schrijver graph would have {expected} vertices, above cap {cap}")
    labels = schrijver_vertices(p)
    if len(labels) != expected:
        raise AssertionError(f"built {len(labels)} vertices, closed form says {expected}")
    label_sets = [frozenset(label) for label in labels]
    edges = [
        (i, j)
        for i, j in combinations(range(len(labels)), 2)
        if label_sets[i].isdisjoint(label_sets[j])
    ]
    return graph_from_edges(len(labels), edges), labels


def mycielski(g: Graph) -> Graph:
    """Mycielski extension: 2n+1 vertices, chromatic number one higher, no new triangles.

    Vertex layout: originals 0..n-1, shadow of i at n+i, apex at 2n.
    Shadow n+i copies the neighborhood of i; the apex joins every shadow.
    """
    n = g.vertex_count
    edges = list(g.edges())
    for i in range(n):
        edges.extend((n + i, j) for j in g.adjacency[i])
        edges.append((n + i, 2 * n))
    return graph_from_edges(2 * n + 1, edges)
