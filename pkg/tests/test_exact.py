import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lamo.errors import IncompatibleRadicands, ParseError, ZeroDenominator
from lamo.exact import ExactNumber, add, checked_isqrt, compare, floor, is_integer, mul_rational

from oracles import decimal_floor

GOLDEN = ExactNumber(-1, 1, 5, 2)
SQRT2 = ExactNumber.sqrt(2)

small_int = st.integers(min_value=-10**6, max_value=10**6)
radicand = st.sampled_from([2, 3, 5, 7])
coeffs = st.tuples(small_int, small_int, st.integers(min_value=1, max_value=1000))


def quad(a, b, d, c):
    return ExactNumber(a, b, d, c if c != 0 else 1)


quadratics = st.builds(
    quad,
    small_int,
    small_int,
    radicand,
    st.integers(min_value=1, max_value=1000),
)


class TestNormalization:
    def test_denominator_sign_flips(self):
        x = ExactNumber(1, 1, 5, -2)
        assert (x.a, x.b, x.c, x.d) == (-1, -1, 2, 5)

    def test_gcd_reduction(self):
        x = ExactNumber(10, 10, 5, 2)
        assert (x.a, x.b, x.c, x.d) == (5, 5, 1, 5)

    def test_perfect_square_folds_to_rational(self):
        x = ExactNumber(1, 3, 9, 2)
        assert x.is_rational and x.as_fraction() == Fraction(10, 2)

    def test_zero_coefficient_clears_radicand(self):
        assert ExactNumber(3, 0, 7, 1).d == 0

    def test_square_factor_extraction(self):
        x = ExactNumber(0, 1, 8, 1)
        assert (x.b, x.d) == (2, 2)

    def test_d_zero_clears_b(self):
        assert ExactNumber(3, 5, 0, 1) == ExactNumber(3)

    def test_normalization_idempotent(self):
        x = ExactNumber(6, 4, 12, 10)
        y = ExactNumber(x.a, x.b, x.d, x.c)
        assert (x.a, x.b, x.c, x.d) == (y.a, y.b, y.c, y.d)

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDenominator):
            ExactNumber(1, 0, 0, 0)

    def test_negative_radicand_rejected(self):
        with pytest.raises(ValueError):
            ExactNumber(0, 1, -2, 1)


class TestArithmetic:
    def test_add_doubles_golden(self):
        s = GOLDEN + GOLDEN
        assert (s.a, s.b, s.c, s.d) == (-1, 1, 1, 5)

    def test_add_identity(self):
        assert ExactNumber(0) + SQRT2 == SQRT2

    def test_add_mixed_rational(self):
        s = ExactNumber(3, 0, 0, 2) + SQRT2
        assert (s.a, s.b, s.c, s.d) == (3, 2, 2, 2)
        assert s.floor() == decimal_floor(3, 2, 2, 2)

    def test_add_incompatible_radicands(self):
        with pytest.raises(IncompatibleRadicands):
            SQRT2 + ExactNumber.sqrt(3)

    def test_mul_rational_examples(self):
        assert mul_rational(GOLDEN, 2, 1) == ExactNumber(-1, 1, 5, 1)
        assert mul_rational(SQRT2, 0, 1) == ExactNumber(0)
        x = mul_rational(ExactNumber(1, 1, 5, 2), 10, 1)
        assert (x.a, x.b, x.c, x.d) == (5, 5, 1, 5)

    def test_mul_rational_zero_denominator(self):
        with pytest.raises(ZeroDenominator):
            mul_rational(GOLDEN, 1, 0)

    def test_division_round_trip(self):
        assert (GOLDEN / GOLDEN) == ExactNumber(1)
        assert (ExactNumber(1) / GOLDEN) == ExactNumber(1, 1, 5, 2)

    def test_reciprocal_of_zero(self):
        with pytest.raises(ZeroDivisionError):
            ExactNumber(0).reciprocal()

    def test_golden_satisfies_its_polynomial(self):
        # x^2 + x - 1 = 0 for x = (-1+sqrt(5))/2
        assert GOLDEN * GOLDEN + GOLDEN - 1 == ExactNumber(0)

    def test_functional_add(self):
        assert add(ExactNumber(1), 2) == ExactNumber(3)


class TestCompare:
    def test_sqrt2_less_than_three_halves(self):
        assert compare(SQRT2, ExactNumber(3, 0, 0, 2)) < 0

    def test_reflexive_equal(self):
        assert compare(GOLDEN, GOLDEN) == 0

    def test_golden_greater_than_eight_fifths(self):
        assert compare(ExactNumber(1, 1, 5, 2), ExactNumber(8, 0, 0, 5)) > 0

    def test_opposite_sign_branches(self):
        assert ExactNumber(-3, 1, 5, 1).sign() < 0
        assert ExactNumber(-2, 1, 5, 1).sign() > 0
        assert ExactNumber(3, -1, 5, 1).sign() > 0
        assert ExactNumber(2, -1, 5, 1).sign() < 0

    def test_ordering_operators(self):
        assert SQRT2 < ExactNumber(3, 0, 0, 2) <= ExactNumber(2) > GOLDEN

    def test_compare_across_radicands_raises(self):
        with pytest.raises(IncompatibleRadicands):
            SQRT2 < ExactNumber.sqrt(3)

    def test_equality_across_radicands_is_false(self):
        assert SQRT2 != ExactNumber.sqrt(3)

    @given(radicand, coeffs, coeffs, coeffs)
    def test_transitivity(self, d, p, q, r):
        x, y, z = (ExactNumber(a, b, d, c) for a, b, c in (p, q, r))
        if x <= y and y <= z:
            assert x <= z

    @given(radicand, coeffs, coeffs)
    def test_antisymmetry(self, d, p, q):
        x, y = (ExactNumber(a, b, d, c) for a, b, c in (p, q))
        if x <= y and y <= x:
            assert x == y


class TestFloor:
    def test_contract_examples(self):
        assert floor(ExactNumber(1, 1, 5, 2)) == 1
        assert floor(ExactNumber(7)) == 7
        assert floor(ExactNumber(10, 10, 5, 2)) == 16

    def test_negative_values(self):
        assert floor(ExactNumber(-1, 0, 0, 2)) == -1
        assert floor(-SQRT2) == -2
        assert floor(ExactNumber(1, -1, 5, 2)) == -1

    @given(quadratics)
    def test_floor_postcondition(self, x):
        n = x.floor()
        assert ExactNumber(n) <= x < ExactNumber(n + 1)

    def test_oracle_agreement(self):
        rng = random.Random(20260814)
        for _ in range(300):
            a = rng.randint(-10**6, 10**6)
            b = rng.randint(-10**6, 10**6)
            c = rng.randint(1, 1000)
            d = rng.choice([2, 3, 5, 7])
            x = ExactNumber(a, b, d, c)
            assert x.floor() == decimal_floor(a, b, d, c)


class TestPredicates:
    def test_is_integer_examples(self):
        assert is_integer(ExactNumber(6, 0, 0, 3))
        assert not is_integer(SQRT2)
        assert not is_integer(ExactNumber(4, 0, 0, 3))

    def test_checked_isqrt(self):
        assert checked_isqrt(0) == 0
        assert checked_isqrt(15) == 3
        assert checked_isqrt(16) == 4
        with pytest.raises(ValueError):
            checked_isqrt(-1)

    def test_bool_and_abs(self):
        assert not ExactNumber(0)
        assert abs(ExactNumber(-3, 0, 0, 2)) == Fraction(3, 2)


class TestParse:
    @pytest.mark.parametrize(
        "text,value",
        [
            ("7", ExactNumber(7)),
            ("-12", ExactNumber(-12)),
            ("3/2", ExactNumber(3, 0, 0, 2)),
            ("-3/2", ExactNumber(-3, 0, 0, 2)),
            ("sqrt(5)", ExactNumber.sqrt(5)),
            ("-sqrt(2)", -SQRT2),
            ("2*sqrt(3)", ExactNumber(0, 2, 3, 1)),
            ("sqrt(2)/2", ExactNumber(0, 1, 2, 2)),
            ("(-1+1*sqrt(5))/2", GOLDEN),
            ("(-1+sqrt(5))/2", GOLDEN),
            ("(1-1*sqrt(5))/2", ExactNumber(1, -1, 5, 2)),
            ("(3+2*sqrt(2))/2", ExactNumber(3, 2, 2, 2)),
            ("1+1*sqrt(5)", ExactNumber(1, 1, 5, 1)),
            ("(−1+1*sqrt(5))/2", GOLDEN),
        ],
    )
    def test_parse_literals(self, text, value):
        assert ExactNumber.parse(text) == value

    @given(quadratics)
    def test_literal_round_trip(self, x):
        assert ExactNumber.parse(x.literal()) == x

    @pytest.mark.parametrize("bad", ["", "1.5", "sqrt(-2)", "1//2", "one", "(1+)/2", "0.25"])
    def test_parse_rejects(self, bad):
        with pytest.raises(ParseError):
            ExactNumber.parse(bad)

    def test_hash_consistent_with_eq(self):
        assert hash(ExactNumber(2, 2, 5, 2)) == hash(ExactNumber(1, 1, 5, 1))
