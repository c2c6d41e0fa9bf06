"""Exact small-case colorability thresholds by isomorph-free graph enumeration.

The quantity computed here is the largest integer F such that every
graph on at most F vertices with no odd cycle of length <= 2k-1 can be
properly n-colored.  The search enumerates graphs size by size, one
representative per isomorphism class, and stops at the first graph that
defeats n-coloring; its size minus one is the exact value.

Enumeration grows graphs one vertex at a time.  Each candidate is
normalized to a canonical labeling (iterative color refinement, then
backtracking over individualizations with interchangeable-twin
skipping), and a per-size set of canonical forms rejects isomorphs.
Three restrictions are available, all of which hold for a vertex-minimal
non-n-colorable graph and therefore never change the computed value:
connectivity, minimum degree >= n, and the ball-size condition
|ball(v, k-1)| >= n(k-1)+1 for every vertex.
"""

from __future__ import annotations

import os
from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterator

from .coloring import search_coloring
from .graphs import Graph, ball

DEFAULT_ORACLE_CAP = 10


def _oracle_cap() -> int:
    return int(os.environ.get("ODDCHROM_ORACLE_CAP", DEFAULT_ORACLE_CAP))


@dataclass(frozen=True)
class OracleResult:
    """Outcome of exact_threshold.

    status "exact" means `value` is the threshold itself and `witness`
    is a graph on value+1 vertices with the required odd girth that is
    not n-colorable; "lower_bound_only" certifies threshold >= value.
    """

    n: int
    k: int
    status: str
    value: int
    witness: Graph | None
    vertices_searched: int


# ---------------------------------------------------------------------------
# canonical labeling on bitmask adjacency rows


def _refine(n: int, masks: tuple[int, ...] | list[int], colors: list[int]) -> list[int]:
    """Stable iterative refinement: split color classes by neighbor color multisets."""
    while True:
        sigs = []
        for v in range(n):
            nb = []
            m = masks[v]
            while m:
                low = m & -m
                nb.append(colors[low.bit_length() - 1])
                m ^= low
            nb.sort()
            sigs.append((colors[v], tuple(nb)))
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new_colors = [rank[s] for s in sigs]
        if new_colors == colors:
            return colors
        colors = new_colors


def _certificate(n: int, masks: tuple[int, ...] | list[int]) -> tuple[int, ...]:
    """Lexicographically smallest relabeled adjacency rows over explored orderings.

    Orderings are generated by refinement plus individualization; within
    a color class, vertices whose transposition is an automorphism are
    interchangeable and only one of them is branched on.
    """
    if n == 0:
        return ()
    best: list[tuple[int, ...] | None] = [None]

    def emit(colors: list[int]) -> None:
        perm = sorted(range(n), key=lambda v: colors[v])
        pos = [0] * n
        for new, old in enumerate(perm):
            pos[old] = new
        rows = []
        for old in perm:
            row = 0
            m = masks[old]
            while m:
                low = m & -m
                row |= 1 << pos[low.bit_length() - 1]
                m ^= low
            rows.append(row)
        cert = tuple(rows)
        if best[0] is None or cert < best[0]:
            best[0] = cert

    def search(colors: list[int]) -> None:
        colors = _refine(n, masks, colors)
        counts = Counter(colors)
        target = next((c for c in sorted(counts) if counts[c] > 1), None)
        if target is None:
            emit(colors)
            return
        cell = [v for v in range(n) if colors[v] == target]
        reps: list[int] = []
        for v in cell:
            if any(
                (masks[v] & ~(1 << u)) == (masks[u] & ~(1 << v)) for u in reps
            ):
                continue
            reps.append(v)
        fresh = max(colors) + 1
        for v in reps:
            child = list(colors)
            child[v] = fresh
            search(child)

    search([0] * n)
    assert best[0] is not None
    return best[0]


def _graph_to_masks(g: Graph) -> list[int]:
    return [sum(1 << u for u in nbrs) for nbrs in g.adjacency]


def _masks_to_graph(masks: tuple[int, ...] | list[int]) -> Graph:
    adjacency = []
    for m in masks:
        row = []
        while m:
            low = m & -m
            row.append(low.bit_length() - 1)
            m ^= low
        adjacency.append(tuple(row))
    return Graph(len(adjacency), tuple(adjacency))


def canonical_certificate(g: Graph) -> tuple[int, ...]:
    """Isomorphism-invariant certificate: equal certificates mean isomorphic graphs."""
    return _certificate(g.vertex_count, _graph_to_masks(g))


def isomorphic(a: Graph, b: Graph) -> bool:
    return a.vertex_count == b.vertex_count and canonical_certificate(a) == canonical_certificate(b)


# ---------------------------------------------------------------------------
# isomorph-free generation


def _shortest_odd_walk_through(masks: list[int], u: int) -> int | None:
    """Length of the shortest odd closed walk through u (BFS on the parity double cover)."""
    n = len(masks)
    dist = [[None, None] for _ in range(n)]
    dist[u][0] = 0
    queue = deque([(u, 0)])
    while queue:
        x, p = queue.popleft()
        d = dist[x][p]
        m = masks[x]
        while m:
            low = m & -m
            y = low.bit_length() - 1
            m ^= low
            if dist[y][1 - p] is None:
                dist[y][1 - p] = d + 1
                queue.append((y, 1 - p))
    return dist[u][1]


def _submasks(mask: int) -> Iterator[int]:
    """All submasks of mask, including 0, in decreasing order."""
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


def _independent_submasks(masks: list[int], allowed: int) -> Iterator[int]:
    """All subsets of `allowed` that are independent sets, including 0."""
    if allowed == 0:
        yield 0
        return
    low = allowed & -allowed
    v = low.bit_length() - 1
    rest = allowed ^ low
    yield from _independent_submasks(masks, rest)
    for s in _independent_submasks(masks, rest & ~masks[v]):
        yield s | low


def _neighbor_sets(
    parent: tuple[int, ...],
    *,
    need_independent: bool,
    connected: bool,
    min_degree: int | None,
) -> Iterator[int]:
    """Candidate neighbor sets for a new vertex attached to `parent`."""
    size = len(parent)
    everything = (1 << size) - 1
    mandatory = 0
    if min_degree is not None:
        for u in range(size):
            deg = bin(parent[u]).count("1")
            if deg < min_degree - 1:
                return  # one more edge cannot lift this vertex to min_degree
            if deg == min_degree - 1:
                mandatory |= 1 << u
        if need_independent:
            for u in range(size):
                if mandatory >> u & 1 and parent[u] & mandatory:
                    return  # mandatory set is not independent
    allowed = everything & ~mandatory
    if need_independent and mandatory:
        for u in range(size):
            if mandatory >> u & 1:
                allowed &= ~parent[u]
    subsets = (
        _independent_submasks(parent, allowed) if need_independent else _submasks(allowed)
    )
    for extra in subsets:
        s = extra | mandatory
        if connected and s == 0:
            continue
        if min_degree is not None and bin(s).count("1") < min_degree:
            continue
        yield s


def _extend(parent: tuple[int, ...], s: int) -> list[int]:
    new_bit = 1 << len(parent)
    child = [row | new_bit if s >> i & 1 else row for i, row in enumerate(parent)]
    child.append(s)
    return child


def enumerate_graphs(
    v: int,
    *,
    odd_girth_min: int | None = None,
    min_degree: int | None = None,
    connected: bool = False,
    cap: int | None = None,
) -> Iterator[Graph]:
    """All graphs on v vertices matching the filters, one per isomorphism class.

    Yields canonically labeled graphs.  odd_girth_min (an odd integer)
    excludes graphs with any odd cycle below it; min_degree applies to
    the finished graphs only; connected restricts the whole growth chain,
    which loses nothing because every connected graph has a non-cut
    vertex.
    """
    effective_cap = _oracle_cap() if cap is None else cap
    if v < 1:
        raise ValueError("v must be at least 1")
    if v > effective_cap:
        raise ValueError(f"v={v} exceeds the enumeration cap {effective_cap}")
    if odd_girth_min is not None and (odd_girth_min < 3 or odd_girth_min % 2 == 0):
        raise ValueError("odd_girth_min must be an odd integer >= 3")
    need_independent = odd_girth_min is not None and odd_girth_min >= 5

    if v == 1:
        if min_degree is None or min_degree <= 0:
            yield Graph(1, ((),))
        return

    level: list[tuple[int, ...]] = [(0,)]
    for size in range(2, v + 1):
        final = size == v
        seen: set[tuple[int, ...]] = set()
        next_level: list[tuple[int, ...]] = []
        for parent in level:
            for s in _neighbor_sets(
                parent,
                need_independent=need_independent,
                connected=connected,
                min_degree=min_degree if final else None,
            ):
                child = _extend(parent, s)
                if odd_girth_min is not None:
                    walk = _shortest_odd_walk_through(child, size - 1)
                    if walk is not None and walk < odd_girth_min:
                        continue
                cert = _certificate(size, child)
                if cert in seen:
                    continue
                seen.add(cert)
                if final:
                    yield _masks_to_graph(cert)
                else:
                    next_level.append(cert)
        level = next_level


# ---------------------------------------------------------------------------
# threshold search


def check_ball_sizes(g: Graph, n: int, k: int) -> int | None:
    """First vertex whose radius-(k-1) ball has fewer than n(k-1)+1 vertices, else None.

    Every vertex-minimal non-n-colorable graph without odd cycles of
    length <= 2k-1 satisfies the bound, which is what makes this a safe
    search prune.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    required = n * (k - 1) + 1
    for v in range(g.vertex_count):
        if len(ball(g, v, k - 1)) < required:
            return v
    return None


def exact_threshold(
    n: int,
    k: int,
    v_max: int,
    *,
    prune_min_degree: bool = True,
    prune_ball: bool = True,
    prune_connected: bool = True,
    cap: int | None = None,
) -> OracleResult:
    """Exact n-colorability threshold for odd girth >= 2k+1, searched up to v_max vertices.

    Returns status "exact" with a witness when some graph of at most
    v_max vertices defeats n-coloring, otherwise "lower_bound_only" with
    value v_max.  The prune toggles exist for soundness testing; any
    combination returns the same result.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if k < 2:
        raise ValueError("k must be at least 2")
    if v_max < 1:
        raise ValueError("v_max must be at least 1")
    effective_cap = _oracle_cap() if cap is None else cap
    if v_max > effective_cap:
        raise ValueError(f"v_max={v_max} exceeds the enumeration cap {effective_cap}")
    for v in range(1, v_max + 1):
        for g in enumerate_graphs(
            v,
            odd_girth_min=2 * k + 1,
            min_degree=n if prune_min_degree else None,
            connected=prune_connected,
            cap=effective_cap,
        ):
            if prune_ball and check_ball_sizes(g, n, k) is not None:
                continue
            if search_coloring(g, n) is None:
                return OracleResult(n, k, "exact", v - 1, g, v)
    return OracleResult(n, k, "lower_bound_only", v_max, None, v_max)
