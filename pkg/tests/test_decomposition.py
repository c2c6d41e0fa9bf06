import random

import pytest

from oddchrom import (
    Graph,
    SchrijverParams,
    SphereIndependenceError,
    carve,
    carve_by_order,
    cycle_graph,
    max_ball_size,
    schrijver_graph,
    shortest_odd_cycle,
    verify_carve,
)
from corpus import carve_corpus


class TestMaxBallSize:
    def test_c5_radius_1(self):
        assert max_ball_size(cycle_graph(5), 1) == 3

    def test_c7_radius_2(self):
        assert max_ball_size(cycle_graph(7), 2) == 5

    def test_edgeless(self):
        assert max_ball_size(Graph(4, ((), (), (), ())), 1) == 1

    def test_empty_graph_rejected(self):
        with pytest.raises(ValueError):
            max_ball_size(Graph(0, ()), 1)


class TestCarve:
    def test_c5_k2_pinned_partition(self):
        result = carve(cycle_graph(5), 2)
        assert [sorted(b) for b in result.balls] == [[0], [2]]
        assert sorted(result.boundary) == [1, 3, 4]
        assert result.threshold_base == 3 and result.threshold_exponent == 1
        # (threshold - 1) * total ball size >= boundary size: (3-1)*2 = 4 >= 3
        assert (result.threshold_base - 1) * 2 >= 3

    def test_edgeless_all_singletons(self):
        g = Graph(4, ((), (), (), ()))
        result = carve(g, 2)
        assert [sorted(b) for b in result.balls] == [[0], [1], [2], [3]]
        assert result.boundary == frozenset()

    def test_c7_k3_pinned_partition(self):
        result = carve(cycle_graph(7), 3)
        assert [sorted(b) for b in result.balls] == [[0, 1, 6], [3]]
        assert sorted(result.boundary) == [2, 4, 5]
        assert result.threshold_base == 5 and result.threshold_exponent == 2
        assert all(verify_carve(cycle_graph(7), result).values())

    def test_precondition_carries_violation(self):
        with pytest.raises(SphereIndependenceError) as excinfo:
            carve(cycle_graph(5), 3)
        assert excinfo.value.violation.center == 0
        assert excinfo.value.violation.radius == 2

    def test_trace_records_sizes(self):
        result = carve(cycle_graph(7), 3)
        first = result.trace[0]
        assert (first.center, first.radius) == (0, 1)
        assert (first.inner_size, first.outer_size) == (3, 5)

    def test_min_ball_rule_deterministic(self):
        result = carve(cycle_graph(7), 3, center_rule="min_ball")
        again = carve(cycle_graph(7), 3, center_rule="min_ball")
        assert result == again
        assert all(verify_carve(cycle_graph(7), result).values())

    def test_unknown_rule_rejected(self):
        with pytest.raises(ValueError):
            carve(cycle_graph(5), 2, center_rule="random")

    def test_empty_graph(self):
        result = carve(Graph(0, ()), 2)
        assert result.balls == () and result.boundary == frozenset()


class TestCarveByOrder:
    def test_c5_k2(self):
        g = cycle_graph(5)
        result = carve_by_order(g, 2)
        assert result.threshold_base == 5 and result.threshold_exponent == 2
        assert all(verify_carve(g, result).values())

    def test_single_vertex(self):
        result = carve_by_order(Graph(1, ((),)), 2)
        assert [sorted(b) for b in result.balls] == [[0]]
        assert result.boundary == frozenset()

    def test_c9_k2_threshold_3(self):
        g = cycle_graph(9)
        result = carve_by_order(g, 2)
        assert result.threshold == pytest.approx(3.0)
        assert all(verify_carve(g, result).values())


class TestGuarantees:
    def _schrijver_cases(self):
        cases = []
        for m, d in [(2, 1), (3, 1), (4, 1), (3, 2), (4, 2)]:
            g, _ = schrijver_graph(SchrijverParams(m, d))
            cycle = shortest_odd_cycle(g)
            top_k = (cycle.length - 1) // 2 if cycle is not None else 4
            for k in range(2, min(top_k, 4) + 1):
                cases.append((g, k))
        return cases

    def test_invariants_on_odd_cycles(self):
        for t in range(2, 13):
            g = cycle_graph(2 * t + 1)
            for k in range(2, t + 1):
                for result in (carve(g, k), carve_by_order(g, k)):
                    checks = verify_carve(g, result)
                    assert all(checks.values()), (t, k, checks)

    def test_invariants_on_schrijver_graphs(self):
        for g, k in self._schrijver_cases():
            for rule in ("first", "min_ball"):
                for result in (carve(g, k, rule), carve_by_order(g, k, rule)):
                    checks = verify_carve(g, result)
                    assert all(checks.values()), (g, k, rule, checks)

    def test_invariants_on_random_corpus(self):
        for g, k in carve_corpus(60):
            for result in (carve(g, k), carve_by_order(g, k)):
                checks = verify_carve(g, result)
                assert all(checks.values()), (g, k, checks)

    def test_step_count_bounded_by_vertices(self):
        rng = random.Random(3)
        for g, k in carve_corpus(25, seed=5):
            result = carve(g, k)
            assert len(result.trace) <= g.vertex_count

    def test_json_round_trip_fields(self):
        result = carve(cycle_graph(7), 3)
        payload = result.to_json()
        assert payload["balls"] == [[0, 1, 6], [3]]
        assert payload["boundary"] == [2, 4, 5]
        assert payload["trace"][0]["center"] == 0
        assert payload["threshold_base"] == 5
