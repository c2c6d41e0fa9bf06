import pytest

from oddchrom import (
    SchrijverParams,
    cycle_graph,
    exact_chromatic,
    graph_from_edges,
    isomorphic,
    mycielski,
    odd_girth_at_least,
    predicted_schrijver_properties,
    schrijver_graph,
    schrijver_vertices,
    shortest_odd_cycle,
)
from bruteforce import brute_chromatic, brute_odd_girth


class TestCycleGraph:
    def test_c5(self):
        g = cycle_graph(5)
        assert g.vertex_count == 5 and g.edge_count == 5

    def test_c7_odd_girth_and_chromatic(self):
        g = cycle_graph(7)
        assert brute_odd_girth(g) == 7
        assert brute_chromatic(g) == 3

    def test_c4_bipartite(self):
        assert shortest_odd_cycle(cycle_graph(4)) is None

    def test_too_short_rejected(self):
        with pytest.raises(ValueError):
            cycle_graph(2)

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_odd_cycle_sphere_independence_boundary(self, k):
        from oddchrom import check_sphere_independence

        g = cycle_graph(2 * k + 1)
        assert check_sphere_independence(g, k) is None
        assert check_sphere_independence(g, k + 1) is not None


class TestSchrijver:
    def test_m2_d1_is_c5(self):
        g, labels = schrijver_graph(SchrijverParams(2, 1))
        assert labels == [(1, 3), (1, 4), (2, 4), (2, 5), (3, 5)]
        assert isomorphic(g, cycle_graph(5))

    def test_m2_d2_vertex_count(self):
        g, _ = schrijver_graph(SchrijverParams(2, 2))
        assert g.vertex_count == 9  # 6/4 * C(4,2)

    def test_m1_d1_is_triangle(self):
        g, labels = schrijver_graph(SchrijverParams(1, 1))
        assert g.vertex_count == 3 and g.edge_count == 3
        assert labels == [(1,), (2,), (3,)]

    def test_predicted_properties(self):
        assert predicted_schrijver_properties(SchrijverParams(2, 1)) == (5, 3, 5)
        assert predicted_schrijver_properties(SchrijverParams(2, 2)) == (9, 4, 3)
        assert predicted_schrijver_properties(SchrijverParams(3, 2)) == (16, 4, 5)

    @pytest.mark.parametrize("m,d", [(1, 1), (2, 1), (3, 1), (4, 1), (2, 2), (3, 2), (2, 3)])
    def test_count_matches_formula(self, m, d):
        params = SchrijverParams(m, d)
        expected_count, _, _ = predicted_schrijver_properties(params)
        assert len(schrijver_vertices(params)) == expected_count

    @pytest.mark.parametrize("m,d", [(2, 1), (3, 1), (2, 2), (3, 2)])
    def test_small_instances_chromatic_and_girth(self, m, d):
        params = SchrijverParams(m, d)
        count, chromatic, girth_bound = predicted_schrijver_properties(params)
        g, _ = schrijver_graph(params)
        assert g.vertex_count == count
        assert exact_chromatic(g).value == chromatic
        cycle = shortest_odd_cycle(g)
        assert cycle is not None and cycle.length >= girth_bound

    def test_cap_enforced(self):
        with pytest.raises(ValueError):
            schrijver_graph(SchrijverParams(2, 2), max_vertices=5)

    def test_invalid_params(self):
        with pytest.raises(ValueError):
            SchrijverParams(0, 1)


class TestMycielski:
    def test_k2_gives_c5(self):
        k2 = graph_from_edges(2, [(0, 1)])
        assert isomorphic(mycielski(k2), cycle_graph(5))

    def test_groetzsch_from_c5(self):
        g = mycielski(cycle_graph(5))
        assert g.vertex_count == 11 and g.edge_count == 20
        assert brute_odd_girth(g) == 5  # triangle-free with an odd cycle
        assert brute_chromatic(g) == 4  # independent oracle
        assert exact_chromatic(g).value == 4

    def test_single_vertex(self):
        g = mycielski(graph_from_edges(1, []))
        assert g.vertex_count == 3
        assert list(g.edges()) == [(1, 2)]  # shadow-apex edge; the original stays isolated

    def test_preserves_triangle_freeness(self):
        for base in (cycle_graph(5), cycle_graph(7), mycielski(cycle_graph(5))):
            if odd_girth_at_least(base, 5):
                assert odd_girth_at_least(mycielski(base), 5)

    def test_chromatic_increment(self):
        for base in (graph_from_edges(2, [(0, 1)]), cycle_graph(5), cycle_graph(4)):
            expected = exact_chromatic(base).value + 1
            assert exact_chromatic(mycielski(base)).value == expected
