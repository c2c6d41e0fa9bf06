"""Lower and upper bounds for the n-colorability threshold of odd-girth-constrained graphs.

Throughout, L(n, k) denotes the largest integer such that every graph on
at most L(n, k) vertices with no odd cycle of length <= 2k-1 admits a
proper n-coloring.  Known exact values: L(1, k) = 1 and L(2, k) = 2k.

Lower bounds implemented:
  * kst_lower:        (k / (2(n-1)))^(n-1) - 1, possibly vacuous for large n.
  * quad_lower:       n + (k-1)(n-1)(n+2)/2, an exact integer.
  * factorial_lower:  (n+k)(n+k+1)...(n+2k-1) / (2^(k-1) k^k), exact rational.
  * recurrent_lower:  the two-step recurrence
        L(n) >= min over integers t >= n(k-1)+1 of
                max( L(n-1) + t,  t^(1/(k-1)) / (t^(1/(k-1)) - 1) * (L(n-2)+1) - 1 ),
    evaluated with an exact integer crossing test so the reported
    integer never exceeds the true bound.

Upper bounds (both exclusive as computed, converted to inclusive at row
assembly):
  * erdos_upper:      n^(4k+1).
  * schrijver_upper:  ((n-1)(2k-1)+2) / ((n-1)k+1) * C((n-1)k+1, n-1),
    the order of a Schrijver graph with chromatic number n+1, hence an
    exact integer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable

FLOAT_SLACK = 1e-9


def rising_factorial(x: int, k: int) -> int:
    """Product x (x+1) ... (x+k-1); the empty product is 1."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = 1
    for i in range(k):
        out *= x + i
    return out


def kst_lower(n: int, k: int) -> float:
    """(k / (2(n-1)))^(n-1) - 1; may be negative, in which case it is vacuous."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return (k / (2 * (n - 1))) ** (n - 1) - 1


def erdos_upper(n: int, k: int) -> int:
    """n^(4k+1), a strict upper bound."""
    if n < 2 or k < 2:
        raise ValueError("n and k must be at least 2")
    return n ** (4 * k + 1)


def schrijver_upper(n: int, k: int) -> int:
    """((n-1)(2k-1)+2) / ((n-1)k+1) * C((n-1)k+1, n-1), a strict upper bound.

    Divisibility holds because the value counts the vertices of a graph;
    a remainder would mean the formula was implemented wrong.
    """
    if n < 2 or k < 2:
        raise ValueError("n and k must be at least 2")
    numerator = ((n - 1) * (2 * k - 1) + 2) * comb((n - 1) * k + 1, n - 1)
    denominator = (n - 1) * k + 1
    if numerator % denominator != 0:
        raise AssertionError("schrijver_upper did not evaluate to an integer")
    return numerator // denominator


def quad_lower(n: int, k: int) -> int:
    """n + (k-1)(n-1)(n+2)/2; (n-1)(n+2) is always even, so this is exact."""
    if n < 1:
        raise ValueError("n must be at least 1")
    product = (k - 1) * (n - 1) * (n + 2)
    if product % 2 != 0:
        raise AssertionError("parity of the quadratic bound broke")
    return n + product // 2


def factorial_lower(n: int, k: int) -> Fraction:
    """rising_factorial(n+k, k) / (2^(k-1) k^k) as an exact rational."""
    if n < 2 or k < 2:
        raise ValueError("n and k must be at least 2")
    return Fraction(rising_factorial(n + k, k), 2 ** (k - 1) * k**k)


class RecurrenceTable:
    """Memoized certified lower bounds L(n) for one fixed k.

    Base entries are L(1) = 1 and L(2) = 2k; larger n fill in by the
    min-max recurrence.  Values are nondecreasing in n by construction
    (the first recurrence term already exceeds L(n-1))."""

    def __init__(self, k: int):
        if k < 2:
            raise ValueError("k must be at least 2")
        self.k = k
        self.values: dict[int, int] = {1: 1, 2: 2 * k}

    def value(self, n: int) -> int:
        if n < 1:
            raise ValueError("n must be at least 1")
        for m in range(3, n + 1):
            if m not in self.values:
                self.values[m] = self._step(m)
        return self.values[n]

    def _term2(self, t: int, b: int) -> float:
        x = t ** (1.0 / (self.k - 1))
        return x / (x - 1.0) * b - 1.0

    def _step(self, n: int) -> int:
        k = self.k
        prev1 = self.values[n - 1]
        b = self.values[n - 2] + 1
        t_min = n * (k - 1) + 1

        def crossed(t: int) -> bool:
            # term1 >= term2 in exact integers:
            # (L(n-1)+t+1) * (t^(1/(k-1)) - 1) >= t^(1/(k-1)) * b
            # <=> t * (A - b)^(k-1) >= A^(k-1) with A = L(n-1)+t+1 > b
            a = prev1 + t + 1
            if a <= b:
                return False
            return t * (a - b) ** (k - 1) >= a ** (k - 1)

        candidates = [t_min]
        if not crossed(t_min):
            lo, hi = t_min, 2 * t_min
            while not crossed(hi):
                lo, hi = hi, 2 * hi
            while hi - lo > 1:
                mid = (lo + hi) // 2
                if crossed(mid):
                    hi = mid
                else:
                    lo = mid
            candidates.extend([hi - 1, hi])
        best = min(max(prev1 + t, self._term2(t, b)) for t in candidates)
        return math.ceil(best - FLOAT_SLACK)


_TABLES: dict[int, RecurrenceTable] = {}


def recurrence_table(k: int) -> RecurrenceTable:
    if k not in _TABLES:
        _TABLES[k] = RecurrenceTable(k)
    return _TABLES[k]


def recurrent_lower(n: int, k: int) -> int:
    """Certified integer lower bound from the two-step recurrence (memoized per k)."""
    return recurrence_table(k).value(n)


@dataclass(frozen=True)
class BoundsRow:
    """All bound values for one (n, k).

    schrijver_upper and erdos_upper hold the strict (exclusive) values;
    best_upper is inclusive, best_lower is the ceiling-adjusted maximum
    of the lower bounds floored at 1.  Entries not defined for n = 1 are
    None.
    """

    n: int
    k: int
    kst_lower: float | None
    quad_lower: int
    factorial_lower: Fraction | None
    recurrent_lower: int
    schrijver_upper: int | None
    erdos_upper: int | None
    best_lower: int
    best_upper: int | None


def bounds_row(n: int, k: int) -> BoundsRow:
    if n < 1 or k < 2:
        raise ValueError("need n >= 1 and k >= 2")
    quad = quad_lower(n, k)
    recur = recurrent_lower(n, k)
    if n == 1:
        row = BoundsRow(n, k, None, quad, None, recur, None, None, max(1, quad, recur), None)
    else:
        kst = kst_lower(n, k)
        frac = factorial_lower(n, k)
        schr = schrijver_upper(n, k)
        erd = erdos_upper(n, k)
        best_lower = max(1, math.ceil(kst - FLOAT_SLACK), quad, math.ceil(frac), recur)
        best_upper = min(schr - 1, erd - 1)
        row = BoundsRow(n, k, kst, quad, frac, recur, schr, erd, best_lower, best_upper)
    if row.best_upper is not None and row.best_lower > row.best_upper:
        raise AssertionError(f"lower bound exceeds upper bound at (n={n}, k={k})")
    return row


CSV_HEADER = (
    "n,k,kst_lower,quad_lower,factorial_lower,recurrent_lower,"
    "schrijver_upper_incl,erdos_upper_incl,best_lower,best_upper"
)


def _row_cells(row: BoundsRow) -> list[str]:
    return [
        str(row.n),
        str(row.k),
        "" if row.kst_lower is None else str(row.kst_lower),
        str(row.quad_lower),
        "" if row.factorial_lower is None else str(float(row.factorial_lower)),
        str(row.recurrent_lower),
        "" if row.schrijver_upper is None else str(row.schrijver_upper - 1),
        "" if row.erdos_upper is None else str(row.erdos_upper - 1),
        str(row.best_lower),
        "" if row.best_upper is None else str(row.best_upper),
    ]


def bounds_rows(n_values: Iterable[int], k_values: Iterable[int]) -> list[BoundsRow]:
    return [bounds_row(n, k) for n in n_values for k in k_values]


def bounds_table(n_values: Iterable[int], k_values: Iterable[int], fmt: str = "csv") -> str:
    """Render the bounds grid as csv, markdown, or a json string."""
    rows = bounds_rows(n_values, k_values)
    if fmt == "csv":
        lines = [CSV_HEADER]
        lines.extend(",".join(_row_cells(row)) for row in rows)
        return "\n".join(lines) + "\n"
    if fmt == "markdown":
        header = CSV_HEADER.split(",")
        lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
        for row in rows:
            cells = [cell if cell else "-" for cell in _row_cells(row)]
            lines.append("| " + " | ".join(cells) + " |")
        return "\n".join(lines) + "\n"
    if fmt == "json":
        import json

        header = CSV_HEADER.split(",")
        payload = [dict(zip(header, _json_cells(row))) for row in rows]
        return json.dumps({"command": "bounds", "rows": payload}, indent=2, sort_keys=True) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def _json_cells(row: BoundsRow):
    return [
        row.n,
        row.k,
        row.kst_lower,
        row.quad_lower,
        None if row.factorial_lower is None else float(row.factorial_lower),
        row.recurrent_lower,
        None if row.schrijver_upper is None else row.schrijver_upper - 1,
        None if row.erdos_upper is None else row.erdos_upper - 1,
        row.best_lower,
        row.best_upper,
    ]
