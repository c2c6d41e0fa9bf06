import math
from fractions import Fraction

import pytest

from oddchrom import (
    RecurrenceTable,
    bounds_row,
    bounds_table,
    erdos_upper,
    factorial_lower,
    kst_lower,
    quad_lower,
    recurrent_lower,
    rising_factorial,
    schrijver_upper,
)
from oddchrom.bounds import CSV_HEADER

GRID = [(n, k) for n in range(2, 13) for k in range(2, 9)]


class TestRisingFactorial:
    def test_values(self):
        assert rising_factorial(4, 2) == 20
        assert rising_factorial(13, 3) == 2730

    def test_empty_product(self):
        assert rising_factorial(7, 0) == 1
        assert rising_factorial(0, 0) == 1


class TestKstLower:
    def test_values(self):
        assert kst_lower(2, 4) == pytest.approx(1.0)
        assert kst_lower(4, 12) == pytest.approx(7.0)
        assert kst_lower(3, 2) == pytest.approx(-0.75)  # vacuous for large n

    def test_requires_n_at_least_2(self):
        with pytest.raises(ValueError):
            kst_lower(1, 2)


class TestUpperBounds:
    def test_erdos_values(self):
        assert erdos_upper(2, 2) == 512
        assert erdos_upper(2, 3) == 8192
        assert erdos_upper(3, 2) == 19683

    def test_schrijver_values(self):
        assert schrijver_upper(2, 2) == 5
        assert schrijver_upper(3, 2) == 16  # (2*3+2)/(2*2+1) * C(5,2)
        assert schrijver_upper(2, 3) == 7

    def test_schrijver_always_integral(self):
        for n, k in GRID:
            schrijver_upper(n, k)  # raises if divisibility breaks

    def test_schrijver_matches_graph_order(self):
        from oddchrom import SchrijverParams, predicted_schrijver_properties

        for n, k in [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2)]:
            m = (n - 1) * (k - 1) + 1
            d = n - 1
            count, chromatic, _ = predicted_schrijver_properties(SchrijverParams(m, d))
            assert schrijver_upper(n, k) == count
            assert chromatic == n + 1


class TestQuadLower:
    def test_values(self):
        assert quad_lower(3, 2) == 8
        assert quad_lower(4, 2) == 13
        assert quad_lower(1, 5) == 1


class TestFactorialLower:
    def test_exact_fractions(self):
        assert factorial_lower(2, 2) == Fraction(5, 2)
        assert factorial_lower(3, 2) == Fraction(15, 4)
        assert factorial_lower(10, 3) == Fraction(2730, 108)

    def test_telescoping_identity(self):
        # c*(n+a-1)^rising(k) + c*k*(n+a)^rising(k-1) == c*(n+a)^rising(k), a = k
        for n, k in GRID:
            c = Fraction(1, 2 ** (k - 1) * k**k)
            a = k
            lhs = c * rising_factorial(n + a - 1, k) + c * k * rising_factorial(n + a, k - 1)
            assert lhs == c * rising_factorial(n + a, k)

    def test_am_gm_step(self):
        # g^(1/(k-1)) <= (n + a + k/2 - 1) / (2k) with g = c*k*(n+a)^rising(k-1), a = k,
        # checked exactly as g <= rhs^(k-1) in rationals.
        for n, k in GRID:
            c = Fraction(1, 2 ** (k - 1) * k**k)
            a = k
            g = c * k * rising_factorial(n + a, k - 1)
            rhs = Fraction(2 * (n + a) + k - 2, 4 * k)
            assert g <= rhs ** (k - 1)


class TestRecurrentLower:
    def test_bases(self):
        assert recurrent_lower(1, 2) == 1
        assert recurrent_lower(1, 7) == 1
        assert recurrent_lower(2, 2) == 4
        assert recurrent_lower(2, 5) == 10

    def test_spot_values(self):
        assert recurrent_lower(3, 2) == 8
        assert recurrent_lower(4, 2) == 13

    def test_dominates_quadratic_bound(self):
        for n, k in GRID:
            assert recurrent_lower(n, k) >= quad_lower(n, k), (n, k)

    def test_dominates_factorial_bound(self):
        for n, k in GRID:
            floor_guard = math.ceil(factorial_lower(n, k) - Fraction(1, 10**9))
            assert recurrent_lower(n, k) >= floor_guard, (n, k)

    def test_monotone_in_n_and_k(self):
        for n, k in GRID:
            if n > 2:
                assert recurrent_lower(n, k) >= recurrent_lower(n - 1, k)
            if k > 2:
                assert recurrent_lower(n, k) >= recurrent_lower(n, k - 1)

    def test_table_is_memoized(self):
        table = RecurrenceTable(3)
        assert table.value(6) == table.value(6)
        assert table.values[1] == 1 and table.values[2] == 6


class TestBoundsRows:
    def test_row_2_2_pins_exact_value(self):
        row = bounds_row(2, 2)
        assert row.best_lower == 4
        assert row.best_upper == 4

    def test_row_n1(self):
        row = bounds_row(1, 3)
        assert row.best_lower == 1
        assert row.best_upper is None
        assert row.kst_lower is None

    def test_row_3_2(self):
        assert bounds_row(3, 2).best_lower >= 8

    def test_sandwich_on_grid(self):
        for n, k in GRID:
            row = bounds_row(n, k)
            assert row.best_lower <= row.best_upper, (n, k)

    def test_tight_for_two_colors(self):
        for k in (2, 3):
            row = bounds_row(2, k)
            assert row.best_lower == row.best_upper == 2 * k


class TestTables:
    def test_csv_header_and_shape(self):
        text = bounds_table(range(2, 4), range(2, 4), "csv")
        lines = text.strip().split("\n")
        assert lines[0] == CSV_HEADER
        assert len(lines) == 5
        first = lines[1].split(",")
        assert first[0] == "2" and first[1] == "2"
        assert first[8] == "4" and first[9] == "4"

    def test_markdown_table(self):
        text = bounds_table([2], [2], "markdown")
        assert text.startswith("| n | k |")
        assert "| 4 |" in text

    def test_json_rows(self):
        import json

        payload = json.loads(bounds_table([1, 2], [2], "json"))
        assert payload["command"] == "bounds"
        assert payload["rows"][0]["best_lower"] == 1
        assert payload["rows"][1]["best_upper"] == 4

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            bounds_table([2], [2], "yaml")
