import pytest

from polyvis.errors import DomainError, ParseError
from polyvis.poly import (
    IntPoly, SightLine, compute_nF, evaluate, exact_quotient,
    is_excluded_form, parse_poly, perfect_power, poly_gcd, squarefree_part,
    to_text,
)

from tests.conftest import BATTERY

X = IntPoly.x()


def naive(p, x):
    return sum(c * x ** i for i, c in enumerate(p.coeffs))


class TestEvaluate:
    def test_examples(self):
        assert evaluate(X ** 2 - 1, 4) == 15
        assert evaluate(IntPoly(), 7) == 0
        assert evaluate((X ** 2 - 1) ** 2, 3) == 64

    @pytest.mark.parametrize("text", BATTERY + ["-3*x^5+7*x^2-11", "x^9"])
    def test_horner_matches_power_sum(self, text):
        p = parse_poly(text)
        for x in range(-25, 26):
            assert evaluate(p, x) == naive(p, x)

    def test_huge_values_stay_exact(self):
        p = parse_poly("(x^2-1)^7")
        assert p(10 ** 6) == (10 ** 12 - 1) ** 7


class TestArithmetic:
    def test_trailing_zeros_are_stripped(self):
        assert IntPoly((1, 2, 0, 0)) == IntPoly((1, 2))
        assert IntPoly((0, 0)).is_zero

    def test_zero_has_no_degree(self):
        with pytest.raises(DomainError):
            IntPoly().degree

    def test_ring_operations(self):
        p = X ** 2 - 1
        assert p * p == parse_poly("x^4-2*x^2+1")
        assert (p + 1) == X ** 2
        assert 3 - X == IntPoly((3, -1))
        assert (2 * X + 1).derivative() == IntPoly((2,))

    def test_content_and_primitive_part(self):
        p = IntPoly((-6, 0, -4))
        assert p.content() == 2
        assert p.primitive_part() == IntPoly((3, 0, 2))

    def test_exact_quotient(self):
        assert exact_quotient(X ** 2 - 1, X - 1) == X + 1
        with pytest.raises(ArithmeticError):
            exact_quotient(X ** 2 + 1, X - 1)

    def test_gcd(self):
        a = (X - 1) * (X + 2) ** 2
        b = (X + 2) * (X - 5)
        assert poly_gcd(a, b) == X + 2
        assert poly_gcd(6 * X + 12, 4 * X + 8) == X + 2
        assert poly_gcd(X ** 2 + 1, X + 1) == IntPoly((1,))

    def test_gcd_edge_cases(self):
        assert poly_gcd(IntPoly(), -2 * X + 4) == X - 2
        assert poly_gcd(X + 1, IntPoly()) == X + 1
        assert poly_gcd(X + 2, (X + 2) * (X ** 3 - 7)) == X + 2
        assert poly_gcd(-3 * (X - 1) ** 2, 6 * (X - 1)) == X - 1

    def test_exact_quotient_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            exact_quotient(X, IntPoly())


class TestPerfectPower:
    @pytest.mark.parametrize("text, c, g, k", [
        ("(x^2-1)^2", 1, "x^2-1", 2),
        ("3*(x^2-5*x+6)^2", 3, "x^2-5*x+6", 2),
        ("-(x-3)^4", -1, "x-3", 4),
        ("x^2*(x-1)^2", 1, "x^2-x", 2),
        ("x^2*(x-1)", 1, "x^3-x^2", 1),
        ("x^3-x", 1, "x^3-x", 1),
    ])
    def test_examples(self, text, c, g, k):
        assert perfect_power(parse_poly(text)) == (c, parse_poly(g), k)

    @pytest.mark.parametrize("text", BATTERY)
    def test_recombines(self, text):
        p = parse_poly(text)
        c, g, k = perfect_power(p)
        assert c * g ** k == p
        assert g.leading > 0

    def test_constant_rejected(self):
        with pytest.raises(DomainError, match="constant polynomial"):
            perfect_power(IntPoly((4,)))


class TestSquarefree:
    def test_examples(self):
        assert squarefree_part(parse_poly("(x^2-1)^2")) == X ** 2 - 1
        assert squarefree_part(X ** 2) == X
        assert squarefree_part(X ** 3 - X) == X ** 3 - X
        assert squarefree_part(parse_poly("-4*(x-1)^3")) == X - 1
        assert squarefree_part(IntPoly((-7,))) == IntPoly((1,))

    def test_zero_rejected(self):
        with pytest.raises(DomainError,
                           match="zero polynomial has no squarefree part"):
            squarefree_part(IntPoly())

    @pytest.mark.parametrize("text", BATTERY + ["4*x^2+4*x+1", "x^3*(x+1)"])
    def test_degree_drops_iff_repeated_roots(self, text):
        p = parse_poly(text)
        sqf = squarefree_part(p)
        repeated = not poly_gcd(p, p.derivative()).is_constant
        assert sqf.degree <= p.degree
        assert (sqf.degree == p.degree) == (not repeated)


class TestExcludedForm:
    def test_examples(self):
        assert is_excluded_form(parse_poly("2*x+1")) == (1, 2, 1, 1)
        assert is_excluded_form(X ** 2 - 1) is None
        assert is_excluded_form(parse_poly("4*x^2+4*x+1")) == (1, 2, 1, 2)

    def test_scaled_power(self):
        assert is_excluded_form(parse_poly("7*x^2")) == (7, 1, 0, 2)
        assert is_excluded_form(parse_poly("-3*(2*x-3)^3")) == (-3, 2, -3, 3)

    def test_constant_rejected(self):
        with pytest.raises(DomainError, match="constant polynomial"):
            is_excluded_form(IntPoly((5,)))

    @pytest.mark.parametrize("text", BATTERY + ["5*(3*x+1)^4", "x*(x+1)^2"])
    def test_nonempty_iff_single_root(self, text):
        p = parse_poly(text)
        form = is_excluded_form(p)
        assert (form is not None) == (squarefree_part(p).degree == 1)
        if form is not None:
            a, u, v, b = form
            assert u > 0
            assert a * (u * X + v) ** b == p


class TestThreshold:
    def test_examples(self):
        assert compute_nF(X ** 2) == 0
        assert compute_nF(parse_poly("(x^2-5*x+6)^2")) == 4
        assert compute_nF(parse_poly("(x^2-1)^2")) == 1

    def test_rejects_bad_input(self):
        with pytest.raises(DomainError, match="nonpositive leading"):
            compute_nF(-X)
        with pytest.raises(DomainError, match="constant polynomial"):
            compute_nF(IntPoly((4,)))

    @pytest.mark.parametrize(
        "text", BATTERY + ["x^2-10*x", "x^3-20*x^2+5", "x^4-30*x^3"])
    def test_scan_confirms_minimality(self, text):
        F = parse_poly(text)
        n = compute_nF(F)
        values = [None] + [F(x) for x in range(1, n + 201)]

        def good(a):
            return values[a] > 0 and all(values[b] < values[a]
                                         for b in range(1, a))

        assert all(good(a) for a in range(n + 1, n + 201))
        assert n == 0 or not good(n)


class TestParse:
    def test_examples(self):
        assert parse_poly("(x^2-1)^2").coeffs == (1, 0, -2, 0, 1)
        assert parse_poly("x").coeffs == (0, 1)
        assert parse_poly("2*x+1").coeffs == (1, 2)

    def test_whitespace_and_leading_sign(self):
        assert parse_poly(" - x ^ 2 + 3 ") == 3 - X ** 2
        assert parse_poly("(-(x-1))^2") == (X - 1) ** 2

    @pytest.mark.parametrize("text, position", [
        ("x^", 2),
        ("2x", 1),
        ("x^-1", 2),
        ("(x+1", 4),
        ("x+y", 2),
        ("", 0),
    ])
    def test_errors_carry_position(self, text, position):
        with pytest.raises(ParseError) as info:
            parse_poly(text)
        assert info.value.position == position

    def test_non_integer_exponent(self):
        with pytest.raises(ParseError,
                           match="exponent must be a nonnegative integer"):
            parse_poly("x^x")

    @pytest.mark.parametrize("text", BATTERY + ["-x^3+2", "0", "-7"])
    def test_printing_is_canonical(self, text):
        p = parse_poly(text)
        assert parse_poly(to_text(p)) == p
        assert to_text(parse_poly(to_text(p))) == to_text(p)

    def test_canonical_text(self):
        assert to_text(parse_poly("(x^2-1)^2")) == "x^4-2*x^2+1"
        assert to_text(parse_poly("1+2*x")) == "2*x+1"
        assert str(parse_poly("-x^3+x")) == "-x^3+x"


class TestSightLine:
    def test_power_line(self):
        line = SightLine(X ** 2 - 1, 2)
        assert line.F == parse_poly("(x^2-1)^2")
        assert line.nF == 1
        assert line.nf == 1
        assert line.pair_threshold == 1
        assert line.distinct_roots == 2
        assert line.key == "x^4-2*x^2+1"
        assert str(line) == "(x^2-1)^2"

    def test_from_text(self):
        assert SightLine.from_text("x", 3).F == X ** 3

    @pytest.mark.parametrize("f, m, message", [
        (IntPoly((3,)), 1, "constant polynomial"),
        (-X, 1, "nonpositive leading coefficient"),
        (X, 0, "exponent m"),
    ])
    def test_rejects(self, f, m, message):
        with pytest.raises(DomainError, match=message):
            SightLine(f, m)
