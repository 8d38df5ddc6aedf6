import math

import pytest

from polyvis.errors import DomainError
from polyvis.visibility import (
    block_count, blockers, count_visibility, eF_breakdown, eF_count,
    sieve_invisible, visible_along, visible_oracle,
)

from tests.conftest import BATTERY, line


def oracle_columns(L, N):
    return {a: tuple(h for h in range(1, N + 1)
                     if not visible_oracle(L, a, h))
            for a in range(1, N + 1)}


class TestOracle:
    def test_examples(self):
        assert visible_oracle(line("x"), 3, 2)
        assert not visible_oracle(line("x^2"), 2, 4)

    @pytest.mark.parametrize("text", ["x", "x^2", "2*x+1", "x^2+x"])
    def test_first_column_is_visible(self, text):
        L = line(text)
        assert all(visible_oracle(L, 1, h) for h in range(1, 30))

    def test_zero_value_makes_column_invisible(self):
        L = line("(x^2-1)^2")
        assert not any(visible_oracle(L, 1, h) for h in range(1, 30))

    def test_coprimality(self):
        L = line("x")
        for a in range(1, 201):
            for h in range(1, 201):
                assert visible_oracle(L, a, h) == (math.gcd(a, h) == 1)

    @pytest.mark.parametrize("text", ["x^2+x", "x^3-x", "(x^2-5*x+6)^2"])
    @pytest.mark.parametrize("c", [-5, -1, 2, 3])
    def test_invariant_under_nonzero_multiples(self, text, c):
        F = line(text).F
        for a in range(1, 41):
            for h in range(1, 41):
                assert visible_along(F * c, a, h) == visible_along(F, a, h)

    def test_negative_values_never_block(self):
        # F(1) = -9 < 0 < F(4) = 6
        F = line("x^2-10").F
        assert visible_along(F, 4, 6)

    def test_rejects_nonpositive_coordinates(self):
        with pytest.raises(DomainError):
            visible_oracle(line("x"), 0, 3)


class TestBlockers:
    def test_examples(self):
        assert blockers(line("x"), 2, 2) == [(1, 1)]
        assert blockers(line("x^2"), 2, 3) == []
        assert blockers(line("(x^2-1)^2"), 7, 16) == [(5, 4)]

    def test_limit(self):
        assert blockers(line("x"), 12, 12, limit=2) == [(1, 1), (2, 2)]
        assert len(blockers(line("x"), 12, 12)) == 11

    def test_first_column_rejected(self):
        with pytest.raises(DomainError):
            blockers(line("x"), 1, 1)

    def test_block_count_examples(self):
        assert block_count(line("x^2"), 4, 2, 16) == 4
        assert block_count(line("x"), 2, 1, 10) == 5
        assert block_count(line("(x^2-1)^2"), 7, 5, 100) == 25

    def test_block_count_ordering(self):
        with pytest.raises(DomainError,
                           match="blocker abscissa must be smaller"):
            block_count(line("x"), 3, 3, 10)

    def test_block_count_zero_blocker(self):
        assert block_count(line("(x^2-1)^2"), 5, 1, 100) == 0

    @pytest.mark.parametrize("text", BATTERY)
    def test_block_count_bound(self, text):
        L = line(text)
        N = 60
        for a in range(L.nF + 2, N + 1):
            for b in range(L.nF + 1, a):
                Fa, Fb = L.F(a), L.F(b)
                count = block_count(L, a, b, N)
                assert count * Fa <= N * math.gcd(Fa, Fb)
                assert count == sum(
                    1 for h in range(1, N + 1)
                    if (h * Fb) % Fa == 0)


class TestSieve:
    def test_examples(self):
        assert sieve_invisible(line("x"), 4).invisible == 5
        assert sieve_invisible(line("x^2"), 1).invisible == 0
        assert count_visibility(line("x"), 4) == (11, 5)
        assert count_visibility(line("x^2+x"), 1) == (1, 0)

    def test_zero_first_value(self):
        assert count_visibility(line("(x^2-1)^2"), 1) == (0, 1)

    def test_monomial_density(self):
        visible, _ = count_visibility(line("x^2"), 100)
        assert abs(visible / 100 ** 2 - 0.8319) < 0.05

    def test_matches_oracle(self, battery_line):
        N = 60
        grid = sieve_invisible(battery_line, N)
        assert grid.columns == oracle_columns(battery_line, N)
        assert grid.visible + grid.invisible == N * N

    def test_larger_box_matches_oracle(self):
        L = line("(x^2-1)^2")
        grid = sieve_invisible(L, 50, keep_points=False)
        expected = sum(len(col) for col in oracle_columns(L, 50).values())
        assert grid.invisible == expected
        assert grid.columns is None

    def test_point_queries(self):
        grid = sieve_invisible(line("x"), 10)
        assert not grid.is_visible(4, 6)
        assert grid.is_visible(3, 7)
        points = list(grid.invisible_points())
        assert len(points) == grid.invisible
        assert (points[0].a, points[0].h) == (2, 2)

    def test_counts_only_grid_has_no_points(self):
        grid = sieve_invisible(line("x"), 10, keep_points=False)
        with pytest.raises(DomainError):
            grid.is_visible(2, 2)

    def test_rejects_empty_box(self):
        with pytest.raises(DomainError):
            sieve_invisible(line("x"), 0)

    def test_raised_threshold_keeps_counts(self, battery_line):
        base = sieve_invisible(battery_line, 40, keep_points=False)
        raised = sieve_invisible(battery_line, 40, keep_points=False,
                                 threshold=battery_line.nF + 5)
        assert raised.invisible == base.invisible

    @pytest.mark.parametrize("text", ["x^2+x", "(x^2-1)^2"])
    def test_worker_count_does_not_matter(self, text):
        L = line(text)
        single = sieve_invisible(L, 300, workers=1)
        pooled = sieve_invisible(L, 300, workers=3)
        assert pooled.columns == single.columns
        assert (pooled.invisible, pooled.eF) == (single.invisible, single.eF)

    def test_big_values_take_exact_path(self):
        # F(40) exceeds 2^62, so the int64 fast path is off
        L = line("x^12+1")
        grid = sieve_invisible(L, 40)
        assert grid.columns == oracle_columns(L, 40)


class TestEF:
    def test_no_threshold_means_no_exceptions(self):
        for N in (1, 10, 50):
            assert eF_count(line("x^2"), N) == 0

    def test_examples(self):
        assert eF_count(line("(x^2-5*x+6)^2"), 40) <= 2 * 4 * 40
        # column 1 is invisible and F(1) = 0 blocks nothing
        assert eF_count(line("(x^2-1)^2"), 30) == 30

    @pytest.mark.parametrize("N", [5, 20, 60])
    def test_bound(self, battery_line, N):
        if N <= battery_line.nF:
            pytest.skip("box inside threshold")
        value = eF_count(battery_line, N)
        assert value == 0 or value < 2 * battery_line.nF * N

    def test_breakdown(self):
        parts = eF_breakdown(line("(x^2-5*x+6)^2"), 40)
        assert parts.low_columns < 4 * 40
        assert parts.high_columns < 4 * 40
        assert parts.bound == 320
        assert parts.low_columns + parts.high_columns == eF_count(
            line("(x^2-5*x+6)^2"), 40)

    def test_breakdown_zero_column(self):
        parts = eF_breakdown(line("(x^2-1)^2"), 30)
        assert (parts.low_columns, parts.high_columns) == (30, 0)
