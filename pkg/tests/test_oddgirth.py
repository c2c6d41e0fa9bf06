import random

import pytest

from oddchrom import (
    Coloring,
    SphereViolation,
    bipartite_2_coloring,
    check_sphere_independence,
    cycle_graph,
    graph_from_edges,
    odd_cycle_from_violation,
    odd_girth_at_least,
    shortest_odd_cycle,
)
from bruteforce import brute_odd_girth
from corpus import random_graph


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return graph_from_edges(10, outer + spokes + inner)


class TestShortestOddCycle:
    def test_c5(self):
        cert = shortest_odd_cycle(cycle_graph(5))
        assert cert is not None and cert.length == 5
        assert cert.is_valid(cycle_graph(5))

    def test_c4_none(self):
        assert shortest_odd_cycle(cycle_graph(4)) is None

    def test_petersen(self):
        g = petersen()
        assert brute_odd_girth(g) == 5  # independent oracle
        cert = shortest_odd_cycle(g)
        assert cert is not None and cert.length == 5
        assert cert.is_valid(g)

    def test_matches_brute_force_on_random_graphs(self):
        rng = random.Random(11)
        for _ in range(80):
            g = random_graph(rng.randint(1, 10), rng.choice([0.1, 0.25, 0.5]), rng)
            expected = brute_odd_girth(g)
            cert = shortest_odd_cycle(g)
            if expected is None:
                assert cert is None
            else:
                assert cert is not None and cert.length == expected
                assert cert.is_valid(g)

    def test_none_iff_bipartite(self):
        rng = random.Random(12)
        for _ in range(60):
            g = random_graph(rng.randint(0, 12), 0.3, rng)
            assert (shortest_odd_cycle(g) is None) == isinstance(
                bipartite_2_coloring(g), Coloring
            )


class TestSphereIndependence:
    def test_c5_k2_ok(self):
        assert check_sphere_independence(cycle_graph(5), 2) is None

    def test_c5_k3_pinned_violation(self):
        violation = check_sphere_independence(cycle_graph(5), 3)
        assert violation == SphereViolation(center=0, radius=2, edge=(2, 3))

    def test_c7_k3_ok(self):
        g = cycle_graph(7)
        assert brute_odd_girth(g) == 7  # independent oracle: 7 > 2*3 - 1
        assert check_sphere_independence(g, 3) is None

    def test_k_below_two_rejected(self):
        with pytest.raises(ValueError):
            check_sphere_independence(cycle_graph(5), 1)

    def test_equivalence_with_odd_girth(self):
        rng = random.Random(13)
        for _ in range(120):
            g = random_graph(rng.randint(1, 16), rng.choice([0.08, 0.2, 0.45]), rng)
            for k in (2, 3, 4):
                independent = check_sphere_independence(g, k) is None
                assert independent == odd_girth_at_least(g, 2 * k + 1)

    def test_violation_expands_to_short_odd_cycle(self):
        rng = random.Random(14)
        produced = 0
        for _ in range(200):
            g = random_graph(rng.randint(3, 14), 0.3, rng)
            for k in (2, 3, 4):
                violation = check_sphere_independence(g, k)
                if violation is None:
                    continue
                produced += 1
                cert = odd_cycle_from_violation(g, violation)
                assert cert.length == 2 * violation.radius + 1
                assert cert.length <= 2 * k - 1
                assert cert.is_valid(g)
        assert produced > 50


class TestOddGirthAtLeast:
    def test_c5_threshold_5(self):
        assert odd_girth_at_least(cycle_graph(5), 5)

    def test_c5_threshold_7(self):
        assert not odd_girth_at_least(cycle_graph(5), 7)

    def test_bipartite_passes_everything(self):
        assert odd_girth_at_least(cycle_graph(4), 999)

    def test_even_threshold_rejected(self):
        with pytest.raises(ValueError):
            odd_girth_at_least(cycle_graph(5), 6)
