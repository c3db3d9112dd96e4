import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ceviangeo.field import (
    FieldElement,
    NegativeRadicand,
    NotASquare,
    TowerMismatch,
    canonical_tower,
    element_from_json,
    element_to_json,
    factorize,
    fe,
    format_element,
    parse_element,
    sqrt_extending,
    squarefree_decompose,
)

R2 = FieldElement.root(2)
R3 = FieldElement.root(3)
R6 = FieldElement.root(6)


class TestArithmetic:
    def test_conjugate_product(self):
        assert (1 + R2) * (1 - R2) == -1

    def test_inverse_of_root(self):
        assert R2.inverse() == R2 / 2

    def test_depth1_norm_product(self):
        # 144 - 108 by hand
        assert (12 + 6 * R3) * (12 - 6 * R3) == 36

    def test_mixed_tower_product(self):
        assert R2 * R3 == R6
        assert R6 * R2 == 2 * R3

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            fe(1) / fe(0)

    def test_tower_mismatch(self):
        with pytest.raises(TowerMismatch):
            (R2 + R3) * FieldElement.root(5)

    def test_depth2_inverse(self):
        x = 1 + R2 + R3 + R6
        assert x * x.inverse() == 1

    def test_power(self):
        x = 1 + R2
        assert x ** 5 == x * x * x * x * x
        assert x ** -2 == (x * x).inverse()


class TestSign:
    def test_root_two_below_three_halves(self):
        assert (1 - R2).sign() == -1

    def test_root_three_below_two(self):
        assert (R3 - 2).sign() == -1

    def test_large_comparison(self):
        # 2483^2 * 2 = 12331778 > 3488^2 = 12166144
        assert (fe("2483/32") * R2 - 109).sign() == 1

    def test_zero(self):
        assert (R2 - R2).sign() == 0

    def test_depth2_sign(self):
        # sqrt(2)+sqrt(3) vs sqrt(6): (sqrt2+sqrt3)^2 = 5+2sqrt6 > 6
        assert (R2 + R3 - R6).sign() == 1
        assert (R6 - R2 - R3).sign() == -1

    def test_sign_multiplicative_random(self):
        rng = random.Random(5)
        for _ in range(300):
            tower = rng.choice(((), (2,), (3,), (2, 3), (5, 7)))
            a = _random_element(rng, towers=(tower,))
            b = _random_element(rng, towers=(tower,))
            assert (a * b).sign() == a.sign() * b.sign()

    def test_sign_against_high_precision(self):
        import mpmath

        mpmath.mp.dps = 60
        rng = random.Random(17)
        for _ in range(1000):
            a = _random_element(rng)
            value = _mp_value(a, mpmath)
            s = a.sign()
            if s == 0:
                assert abs(value) < mpmath.mpf("1e-40")
            else:
                assert abs(value) > mpmath.mpf("1e-40")
                assert (value > 0) == (s > 0)


def _random_element(rng, towers=((), (2,), (3,), (2, 3), (2, 5), (3, 7))):
    tower = rng.choice(towers)
    coeffs = [
        Fraction(rng.randint(-8, 8), rng.randint(1, 6)) for _ in range(1 << len(tower))
    ]
    return FieldElement(tower, coeffs)


def _mp_value(a, mpmath):
    from ceviangeo.field import _directions

    m = a.minimal()
    total = mpmath.mpf(m.coeffs[0].numerator) / m.coeffs[0].denominator
    for rad, (i, mult) in _directions(m.tower).items():
        c = m.coeffs[i]
        total += mpmath.mpf(c.numerator) / c.denominator * mult * mpmath.sqrt(rad)
    return total


class TestSqrt:
    def test_rational_square(self):
        assert fe("9/4").sqrt() == fe("3/2")

    def test_rational_nonsquare_reports_radicand(self):
        with pytest.raises(NotASquare) as err:
            fe(2).sqrt()
        assert err.value.radicand == 2

    def test_depth1_square(self):
        assert (3 + 2 * R2).sqrt() == 1 + R2

    def test_sqrt_in_depth2(self):
        a = (5 + 2 * R6).in_tower((2, 3))
        assert a.sqrt() == R2 + R3

    def test_sqrt_of_embedded_integer(self):
        assert fe(12).in_tower((2, 3)).sqrt() == 2 * R3

    def test_negative(self):
        with pytest.raises(NegativeRadicand):
            (-fe(4)).sqrt()

    def test_no_quadratic_extension_helps(self):
        with pytest.raises(NotASquare) as err:
            (7 + R2).in_tower((2, 3)).sqrt()
        assert err.value.radicand is None

    def test_sqrt_extending(self):
        assert sqrt_extending(fe(8)) == 2 * R2
        assert sqrt_extending(5 + 2 * R6) == R2 + R3

    def test_sqrt_squares_roundtrip_random(self):
        rng = random.Random(3)
        count = 0
        while count < 60:
            a = _random_element(rng)
            if a.is_zero():
                continue
            square = a * a
            root = square.sqrt()
            assert root * root == square
            assert root.sign() >= 0
            count += 1


class TestTower:
    def test_canonical_pair(self):
        assert canonical_tower([3, 6]) == (2, 3)
        assert canonical_tower([2, 3]) == (2, 3)
        assert canonical_tower([6]) == (6,)
        assert canonical_tower([]) == ()

    def test_closed_trio(self):
        assert canonical_tower([2, 3, 6]) == (2, 3)
        with pytest.raises(TowerMismatch):
            canonical_tower([2, 3, 5])

    def test_equality_across_representations(self):
        assert R2 * R3 == R6
        assert hash(R2 * R3) == hash(R6)

    def test_hash_matches_int(self):
        assert hash(fe(5)) == hash(5)
        assert fe(5) == 5


class TestSerialization:
    def test_expression_roundtrip(self):
        samples = [
            fe("1/2"),
            1 - fe("2/3") * R2,
            R6 - R2 + 7,
            fe(0),
            -R3 / 5,
            fe("169/8") - fe("2483/32") * R2,
        ]
        for x in samples:
            assert parse_element(format_element(x)) == x

    def test_json_roundtrip(self):
        x = 1 + R2 / 3 - 5 * R6
        assert element_from_json(element_to_json(x)) == x

    def test_json_uses_decimal_strings(self):
        data = element_to_json(fe(10) ** 30)
        assert data["coeffs"][0][0] == str(10 ** 30)

    def test_parse_errors(self):
        from ceviangeo.field import ExpressionError

        for bad in ("1+", "sqrt(x)", "(1+2", "1**2", ""):
            with pytest.raises(ExpressionError):
                parse_element(bad)

    def test_parse_sqrt_normalizes(self):
        assert parse_element("sqrt(8)") == 2 * R2
        assert parse_element("sqrt(12)") == 2 * R3


class TestFactorization:
    def test_against_sympy(self):
        import sympy

        rng = random.Random(11)
        for _ in range(40):
            n = rng.randint(2, 10 ** 9)
            assert factorize(n) == dict(sympy.factorint(n))

    def test_squarefree_decompose(self):
        for n in (1, 4, 12, 360, 9801, 2 ** 10 * 3 ** 5):
            s, m = squarefree_decompose(n)
            assert s * s * m == n
            assert all(e == 1 for e in factorize(m).values()) or m == 1


small_fractions = st.fractions(min_value=-4, max_value=4, max_denominator=5)


def _element_strategy(tower):
    return st.lists(
        small_fractions, min_size=1 << len(tower), max_size=1 << len(tower)
    ).map(lambda cs: FieldElement(tower, cs))


elements_23 = _element_strategy((2, 3))


class TestFieldAxioms:
    @settings(max_examples=60, deadline=None)
    @given(elements_23, elements_23, elements_23)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a

    @settings(max_examples=60, deadline=None)
    @given(elements_23)
    def test_inverses(self, a):
        assert a + (-a) == 0
        if not a.is_zero():
            assert a * a.inverse() == 1

    @settings(max_examples=60, deadline=None)
    @given(elements_23, elements_23)
    def test_order_compatible(self, a, b):
        if a < b:
            assert a + 1 < b + 1
            assert not b < a
