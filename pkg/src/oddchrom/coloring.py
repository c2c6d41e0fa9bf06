"""Constructive colorings and an exact chromatic-number solver.

Three constructive procedures: 2-coloring by distance parity from a
low-eccentricity vertex, recoloring the inside of a ball to free a color
on its surface, and the carve-based recursion that colors the separator
with n-2 colors and every bipartite ball with the two remaining ones.
The carve recursion is sound but deliberately incomplete: failures are
returned as first-class reports, never as improper colorings.

The exact solver is branch-and-bound over colorability targets with
saturation-first vertex selection, forward checking, and a node budget;
on budget exhaustion it reports bracketing bounds instead of guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .decomposition import carve, carve_by_order
from .graphs import Coloring, Graph, ball, distances_from, induced_subgraph, sphere
from .oddgirth import (
    OddCycleCertificate,
    SphereIndependenceError,
    bipartite_2_coloring,
    check_sphere_independence,
)

DEFAULT_NODE_BUDGET = 10_000_000


class DisconnectedError(ValueError):
    """A vertex required to be reachable is not; carries one such vertex."""

    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} is unreachable from the chosen center")


class EccentricityError(ValueError):
    """Some vertex lies too far from the chosen center; carries the witness."""

    def __init__(self, vertex: int, distance: int, limit: int):
        self.vertex = vertex
        self.distance = distance
        self.limit = limit
        super().__init__(
            f"vertex {vertex} is at distance {distance}, above the limit {limit}"
        )


class NoAbsentColorError(ValueError):
    """Every palette color already appears on the target sphere."""

    def __init__(self, sphere_colors: frozenset[int]):
        self.sphere_colors = sphere_colors
        super().__init__("no palette color is absent from the sphere")


@dataclass(frozen=True)
class FailureReport:
    """Where and why the carve-based coloring recursion gave up.

    level counts recursion depth from 0 at the top call; vertices are
    reported in the indexing of the original input graph.
    """

    level: int
    vertices: tuple[int, ...]
    num_colors: int
    reason: str

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "vertices": list(self.vertices),
            "num_colors": self.num_colors,
            "reason": self.reason,
        }


@dataclass(frozen=True)
class ChromaticResult:
    """Outcome of exact_chromatic: an exact value or bracketing bounds."""

    status: str  # "exact" or "budget_exceeded"
    value: int | None
    lower: int
    upper: int
    coloring: Coloring | None
    nodes: int


def verify_coloring(g: Graph, c: Coloring) -> tuple[int, int] | None:
    """First monochromatic edge in ascending order, or None for a proper coloring."""
    if len(c.assignment) != g.vertex_count:
        raise ValueError(
            f"assignment covers {len(c.assignment)} vertices, graph has {g.vertex_count}"
        )
    for u, v in g.edges():
        if c.assignment[u] == c.assignment[v]:
            return (u, v)
    return None


def layer_2_coloring(g: Graph, v: int, k: int) -> Coloring:
    """2-coloring by distance parity from v.

    Valid whenever spheres below radius k are independent, v reaches
    every vertex, and no vertex lies beyond distance k-1.  Each failed
    precondition raises its own error type with a witness.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    violation = check_sphere_independence(g, k)
    if violation is not None:
        raise SphereIndependenceError(violation)
    dist = distances_from(g, v)
    for u, d in enumerate(dist):
        if d is None:
            raise DisconnectedError(u)
    for u, d in enumerate(dist):
        if d > k - 1:
            raise EccentricityError(u, d, k - 1)
    assignment = tuple(d % 2 for d in dist)
    return Coloring(assignment, 2 if any(assignment) else 1)


def extend_inside_ball(
    g: Graph,
    v: int,
    r: int,
    outside: Mapping[int, int],
    num_colors: int,
    k: int,
) -> Coloring:
    """Complete a coloring of everything outside ball(v, r-1) to the whole graph.

    Picks a color absent from the sphere of radius r (as colored by
    `outside`), paints the sphere of radius r-1 with it, and alternates
    it with a second color on the inner spheres.  The result is proper
    provided spheres below radius k are independent and r <= k-1.
    """
    if not 1 <= r <= k - 1:
        raise ValueError("radius r must satisfy 1 <= r <= k-1")
    violation = check_sphere_independence(g, k)
    if violation is not None:
        raise SphereIndependenceError(violation)
    inner = ball(g, v, r - 1)
    expected_outside = set(range(g.vertex_count)) - inner
    if set(outside) != expected_outside:
        raise ValueError("outside coloring must cover exactly the complement of ball(v, r-1)")
    for u, c in outside.items():
        if not 0 <= c < num_colors:
            raise ValueError(f"outside color {c} of vertex {u} outside palette")
    for u in expected_outside:
        for w in g.adjacency[u]:
            if w > u and w in expected_outside and outside[u] == outside[w]:
                raise ValueError(f"outside coloring is not proper on edge ({u},{w})")

    used_on_sphere = frozenset(outside[u] for u in sphere(g, v, r))
    absent = [c for c in range(num_colors) if c not in used_on_sphere]
    if not absent:
        raise NoAbsentColorError(used_on_sphere)
    c1 = absent[0]
    c2 = next((c for c in range(num_colors) if c != c1), None)
    if c2 is None and r >= 2:
        raise ValueError("alternation needs a second palette color")

    dist = distances_from(g, v)
    assignment = list(range(g.vertex_count))
    for u in range(g.vertex_count):
        if u in inner:
            assignment[u] = c1 if (r - 1 - dist[u]) % 2 == 0 else c2
        else:
            assignment[u] = outside[u]
    return Coloring(tuple(assignment), num_colors)


def recursive_carve_coloring(
    g: Graph,
    n: int,
    k: int,
    center_rule: str = "first",
    order_threshold: bool = False,
) -> Coloring | FailureReport:
    """Color with n colors by carving: separator recursively, balls with two reserved colors.

    With n colors, the two highest indices are reserved for the balls of
    one carve and the separator is colored recursively with the lowest
    n-2.  The base cases are n=1 (edgeless) and n=2 (bipartite).  Success
    implies n-colorability; failure reports the level and the residual
    subgraph, since the procedure is a bound-driven heuristic rather
    than a complete search.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if k < 2:
        raise ValueError("k must be at least 2")
    violation = check_sphere_independence(g, k)
    if violation is not None:
        raise SphereIndependenceError(violation)
    do_carve = carve_by_order if order_threshold else carve

    def helper(h: Graph, ids: tuple[int, ...], colors_n: int, level: int):
        if h.vertex_count == 0:
            return {}
        if colors_n <= 0:
            return FailureReport(level, ids, colors_n, "no colors left for a nonempty subgraph")
        if colors_n == 1:
            if h.edge_count > 0:
                return FailureReport(level, ids, 1, "subgraph has an edge")
            return {u: 0 for u in range(h.vertex_count)}
        if colors_n == 2:
            two = bipartite_2_coloring(h)
            if isinstance(two, OddCycleCertificate):
                return FailureReport(level, ids, 2, "subgraph contains an odd cycle")
            return {u: two.assignment[u] for u in range(h.vertex_count)}
        result = do_carve(h, k, center_rule=center_rule)
        sub, relabel = induced_subgraph(h, result.boundary)
        sub_ids = tuple(sorted(result.boundary))
        rec = helper(sub, tuple(ids[u] for u in sub_ids), colors_n - 2, level + 1)
        if isinstance(rec, FailureReport):
            return rec
        assignment = {}
        for old, new in relabel.items():
            assignment[old] = rec[new]
        for b in result.balls:
            bsub, brelabel = induced_subgraph(h, b)
            two = bipartite_2_coloring(bsub)
            if isinstance(two, OddCycleCertificate):  # impossible: balls are bipartite
                raise AssertionError("carved ball is not bipartite")
            for old, new in brelabel.items():
                assignment[old] = colors_n - 2 + two.assignment[new]
        return assignment

    ids = tuple(range(g.vertex_count))
    outcome = helper(g, ids, n, 0)
    if isinstance(outcome, FailureReport):
        return outcome
    return Coloring(tuple(outcome[u] for u in range(g.vertex_count)), n)


class _BudgetExhausted(Exception):
    pass


class _Budget:
    __slots__ = ("remaining", "spent")

    def __init__(self, limit: int | None):
        self.remaining = limit
        self.spent = 0

    def spend(self) -> None:
        self.spent += 1
        if self.remaining is not None:
            if self.remaining <= 0:
                raise _BudgetExhausted
            self.remaining -= 1


def _bit_indices(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _search_assignment(
    adj_masks: list[int], degrees: list[int], m: int, budget: _Budget
) -> list[int] | None:
    """Find a proper m-coloring or prove none exists.

    Branching always picks the uncolored vertex with the fewest remaining
    colors (maximum saturation), breaking ties by higher degree then
    lower index.  Only colors up to one past the highest used index are
    tried, and forced vertices (a single remaining color) are assigned
    by propagation rather than branching.
    """
    n = len(adj_masks)
    if n == 0:
        return []
    if m <= 0:
        return None
    full = (1 << m) - 1
    avail = [full] * n
    color = [-1] * n
    uncolored_mask = (1 << n) - 1
    state = {"used": 0}

    def assign(v: int, c: int, trail: list) -> bool:
        nonlocal uncolored_mask
        stack = [(v, c)]
        while stack:
            x, cx = stack.pop()
            if color[x] != -1:
                if color[x] == cx:
                    continue
                return False
            color[x] = cx
            uncolored_mask &= ~(1 << x)
            trail.append(("col", x))
            if cx + 1 > state["used"]:
                trail.append(("used", state["used"]))
                state["used"] = cx + 1
            bit = 1 << cx
            for w in _bit_indices(adj_masks[x] & uncolored_mask):
                if avail[w] & bit:
                    trail.append(("avail", w, avail[w]))
                    avail[w] &= ~bit
                    if avail[w] == 0:
                        return False
                    if avail[w] & (avail[w] - 1) == 0:
                        stack.append((w, avail[w].bit_length() - 1))
        return True

    def undo(trail: list) -> None:
        nonlocal uncolored_mask
        for entry in reversed(trail):
            if entry[0] == "col":
                _, x = entry
                color[x] = -1
                uncolored_mask |= 1 << x
            elif entry[0] == "used":
                state["used"] = entry[1]
            else:
                _, w, old = entry
                avail[w] = old

    def pick() -> int:
        best = -1
        best_key = None
        for v in _bit_indices(uncolored_mask):
            key = (bin(avail[v]).count("1"), -degrees[v], v)
            if best_key is None or key < best_key:
                best_key = key
                best = v
        return best

    def dfs() -> bool:
        if uncolored_mask == 0:
            return True
        budget.spend()
        v = pick()
        allowed = avail[v] & ((1 << min(state["used"] + 1, m)) - 1)
        for c in _bit_indices(allowed):
            trail: list = []
            if assign(v, c, trail) and dfs():
                return True
            undo(trail)
        return False

    return color if dfs() else None


def _adj_masks(g: Graph) -> list[int]:
    return [sum(1 << u for u in nbrs) for nbrs in g.adjacency]


def search_coloring(g: Graph, num_colors: int, budget: int | None = None) -> Coloring | None:
    """Proper coloring with at most num_colors colors, or None if impossible.

    budget limits decision nodes; exhausting it raises RuntimeError
    rather than returning a wrong negative.
    """
    masks = _adj_masks(g)
    degrees = [len(nbrs) for nbrs in g.adjacency]
    try:
        found = _search_assignment(masks, degrees, num_colors, _Budget(budget))
    except _BudgetExhausted:
        raise RuntimeError("node budget exhausted before the search finished")
    if found is None:
        return None
    return Coloring(tuple(found), num_colors)


def dsatur_greedy(g: Graph) -> Coloring:
    """Greedy coloring in saturation order; an upper bound witness for exact_chromatic."""
    n = g.vertex_count
    if n == 0:
        return Coloring((), 0)
    color = [-1] * n
    neighbor_colors: list[set[int]] = [set() for _ in range(n)]
    degrees = [len(nbrs) for nbrs in g.adjacency]
    for _ in range(n):
        v = min(
            (u for u in range(n) if color[u] == -1),
            key=lambda u: (-len(neighbor_colors[u]), -degrees[u], u),
        )
        c = 0
        while c in neighbor_colors[v]:
            c += 1
        color[v] = c
        for w in g.adjacency[v]:
            neighbor_colors[w].add(c)
    return Coloring(tuple(color), max(color) + 1)


def exact_chromatic(g: Graph, budget: int = DEFAULT_NODE_BUDGET) -> ChromaticResult:
    """Exact chromatic number with witness, or bracketing bounds on budget exhaustion.

    The lower bound is seeded from bipartiteness only (cliques are not
    used: the intended inputs have no triangles anyway).  Colorability
    targets are tried in increasing order, so the first satisfiable
    target is exact.
    """
    n = g.vertex_count
    if n == 0:
        return ChromaticResult("exact", 0, 0, 0, Coloring((), 0), 0)
    if g.edge_count == 0:
        witness = Coloring((0,) * n, 1)
        return ChromaticResult("exact", 1, 1, 1, witness, 0)
    two = bipartite_2_coloring(g)
    if isinstance(two, Coloring):
        witness = Coloring(two.assignment, 2)
        return ChromaticResult("exact", 2, 2, 2, witness, 0)
    greedy = dsatur_greedy(g)
    upper = greedy.num_colors
    lower = 3
    if upper <= lower:
        return ChromaticResult("exact", upper, upper, upper, greedy, 0)
    masks = _adj_masks(g)
    degrees = [len(nbrs) for nbrs in g.adjacency]
    tracker = _Budget(budget)
    for m in range(lower, upper):
        try:
            found = _search_assignment(masks, degrees, m, tracker)
        except _BudgetExhausted:
            return ChromaticResult("budget_exceeded", None, m, upper, greedy, tracker.spent)
        if found is not None:
            witness = Coloring(tuple(found), m)
            return ChromaticResult("exact", m, m, m, witness, tracker.spent)
    return ChromaticResult("exact", upper, upper, upper, greedy, tracker.spent)
