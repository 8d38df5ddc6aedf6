import math

import mpmath
import pytest

from polyvis.densities import (
    DensityRow, convergence_report, density_report, empirical_density,
    excluded_density, exponent_target, fit_exponent, known_density, zeta,
)
from polyvis.errors import DomainError
from polyvis.poly import IntPoly, parse_poly
from polyvis.visibility import count_visibility

from tests.conftest import line

X = IntPoly.x()
SIX_OVER_PI2 = 6 / math.pi ** 2


class TestZeta:
    @pytest.mark.parametrize("tol", [1e-6, 1e-9, 1e-12])
    def test_basel(self, tol):
        result = zeta(2, tol)
        assert abs(result.value - math.pi ** 2 / 6) <= tol
        assert result.error <= tol

    @pytest.mark.parametrize("k", [3, 4, 5, 8])
    def test_against_mpmath(self, k):
        result = zeta(k, 1e-10)
        assert abs(result.value - float(mpmath.zeta(k))) <= 1e-10

    def test_closed_form(self):
        assert abs(zeta(4, 1e-9).value - math.pi ** 4 / 90) <= 1e-9

    def test_divergent(self):
        with pytest.raises(DomainError, match="divergent"):
            zeta(1, 1e-6)

    def test_tolerance_must_be_positive(self):
        with pytest.raises(DomainError):
            zeta(2, 0)


class TestKnownDensity:
    def test_examples(self):
        assert abs(known_density(X).value - SIX_OVER_PI2) < 1e-10
        assert abs(known_density(2 * X + 1).value - 8 / math.pi ** 2) < 1e-10
        reference = known_density(X ** 3 - X)
        assert reference.value == 1
        assert reference.conjectural

    def test_proven_for_powers(self):
        reference = known_density(X ** 2 - 1, m=2)
        assert reference.value == 1
        assert not reference.conjectural

    @pytest.mark.parametrize("text", [
        "(x^2-1)^2", "3*(x^2-5*x+6)^2", "(x^3-x)^3", "(x^2+1)^2*(x-2)^4",
    ])
    def test_typed_out_powers_are_proven(self, text):
        reference = known_density(parse_poly(text))
        assert reference.value == 1
        assert not reference.conjectural
        assert reference.source == "theorem"

    @pytest.mark.parametrize("text", ["x^2*(x-1)", "(x^2-1)^2*(x+3)", "x^2+x"])
    def test_mixed_multiplicities_stay_conjectural(self, text):
        assert known_density(parse_poly(text)).conjectural

    def test_independent_of_scale(self):
        values = {known_density(a * X ** 2).value for a in (1, 2, 7)}
        assert len(values) == 1
        assert abs(values.pop() - 1 / float(mpmath.zeta(3))) < 1e-10

    def test_outer_exponent_multiplies_b(self):
        assert known_density(X, m=2) == known_density(X ** 2)

    @pytest.mark.parametrize("a, u, v, b", [
        (1, 1, 0, 1), (3, 1, 5, 2), (1, 2, 1, 1), (2, 6, 1, 3),
        (1, 15, -4, 2),
    ])
    def test_excluded_forms(self, a, u, v, b):
        reference = excluded_density(a, u, v, b)
        assert 0 < reference.value <= 1
        assert not reference.conjectural
        plain = 1 / float(mpmath.zeta(1 + b))
        if u == 1:
            assert reference.value == pytest.approx(plain, abs=1e-11)
        else:
            assert reference.value > plain

    def test_rejects(self):
        with pytest.raises(DomainError, match="constant polynomial"):
            known_density(IntPoly((5,)))
        with pytest.raises(DomainError):
            known_density(-X)


class TestEmpirical:
    def test_examples(self):
        assert empirical_density(line("x"), 4) == 0.6875
        for text in ("x", "x^2", "2*x+1", "x^2+x"):
            assert empirical_density(line(text), 1) == 1.0

    def test_exponent_fit(self):
        rows = [DensityRow(N, 0, 3 * N ** 2, 0.0, 0.0) for N in (10, 20, 40)]
        assert fit_exponent(rows) == pytest.approx(2.0)
        assert fit_exponent(rows[:1]) is None
        assert fit_exponent([DensityRow(10, 100, 0, 1.0, 0.0)] * 2) is None

    def test_convergence_of_identity(self):
        report = convergence_report(line("x"), [100, 200])
        assert report.fitted_exponent == pytest.approx(2.0, abs=0.05)
        assert report.exponent_target is None
        assert report.reference_density == pytest.approx(SIX_OVER_PI2)
        for row in report.rows:
            assert row.density == row.visible / row.N ** 2
            assert 0 <= row.density <= 1

    def test_single_row_rejected(self):
        with pytest.raises(DomainError):
            convergence_report(line("x"), [100])

    def test_report_rejects_unsorted(self):
        with pytest.raises(DomainError):
            density_report(line("x"), [20, 10])

    def test_exponent_target(self):
        assert exponent_target(line("(x^2-1)^2")) == 1.5
        assert exponent_target(line("x^2-1", 2)) == 1.5
        assert exponent_target(line("x^2")) is None
        assert exponent_target(line("2*x+1")) is None

    def test_two_root_report(self):
        report = convergence_report(line("x^2-1", 2), [60, 120, 240])
        fractions = [row.invisible_fraction for row in report.rows]
        assert all(x > y for x, y in zip(fractions, fractions[1:]))
        assert report.exponent_target == 1.5
        assert report.F == "x^4-2*x^2+1"


@pytest.mark.slow
class TestDeskScale:
    def test_classical_density(self):
        report = density_report(line("x"), [2000])
        assert abs(report.rows[-1].density - SIX_OVER_PI2) < 0.01

    def test_monomial_density(self):
        target = 1 / zeta(3, 1e-12).value
        assert abs(empirical_density(line("x^2"), 2000) - target) < 0.02

    def test_shifted_linear_density(self):
        assert abs(empirical_density(line("2*x+1"), 2000)
                   - 8 / math.pi ** 2) < 0.015

    def test_squared_two_root_polynomial(self):
        report = convergence_report(line("(x^2-1)^2"), [500, 1000, 2000])
        fractions = [row.invisible_fraction for row in report.rows]
        assert all(x > y for x, y in zip(fractions, fractions[1:]))
        assert fractions[-1] <= 0.10
        assert report.fitted_exponent <= 1.85
        densities = [row.density for row in report.rows]
        assert densities == sorted(densities)

    def test_worker_count_does_not_change_counts(self):
        L = line("(x^2-1)^2")
        assert count_visibility(L, 500, workers=1) == \
            count_visibility(L, 500, workers=8)
