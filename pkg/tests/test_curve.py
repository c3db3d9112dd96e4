import random
from fractions import Fraction

import pytest

from ceviangeo.field import FieldElement, fe
from ceviangeo.plane import A, B, C, BaryPoint, point
from ceviangeo.curve import (
    GENERATOR,
    BadParameter,
    MapUndefined,
    NFPoint,
    NormalFormCurve,
    OffCurve,
    WPoint,
    bary_to_nf,
    bary_to_w,
    curve_invariants,
    is_torsion,
    j_invariant,
    median_torsion_bary,
    nf_to_bary,
    nf_to_w,
    on_translation_locus,
    rational_torsion,
    sample_translation_points,
    torsion_order_census,
    torsion_points,
    translation_cubic,
    translation_y_discriminant,
    w_to_bary,
    w_to_nf,
)

R2 = FieldElement.root(2)
R3 = FieldElement.root(3)


class TestInvariants:
    def test_j(self):
        assert j_invariant() == 54000
        assert j_invariant() == 2 ** 4 * 3 ** 3 * 5 ** 3

    def test_c4_c6_disc(self):
        inv = curve_invariants()
        assert inv["b2"] == 24
        assert inv["b4"] == -6
        assert inv["c4"] == 720
        assert inv["c6"] == -19008
        assert inv["disc"] == 6912


class TestGroupLaw:
    def test_named_multiples(self):
        assert 2 * GENERATOR == WPoint.of(fe("1/2"), R2 / 4)
        assert 4 * GENERATOR == WPoint.of(fe("169/8"), fe("-2483/32") * R2)

    def test_secant_addition(self):
        assert WPoint.of(1, 2) + WPoint.of(-3, 6) == WPoint.of(-3, -6)

    def test_identity_and_inverse(self):
        inf = WPoint.infinity()
        p = WPoint.of(1, 2)
        assert p + inf == p
        assert inf + p == p
        assert p + (-p) == inf

    def test_two_torsion_doubles_to_identity(self):
        assert WPoint.of(0, 0).double() == WPoint.infinity()

    def test_off_curve_rejected(self):
        with pytest.raises(OffCurve):
            WPoint.of(2, 2)

    def test_group_axioms_random(self):
        rng = random.Random(77)
        pool = torsion_points() + [k * GENERATOR for k in range(1, 5)]
        pool += [-p for p in pool]
        for _ in range(200):
            p, q, r = (rng.choice(pool) for _ in range(3))
            assert p + q == q + p
            assert (p + q) + r == p + (q + r)

    def test_orders(self):
        assert WPoint.of(0, 0).order() == 2
        assert WPoint.of(1, 2).order() == 3
        assert WPoint.of(-3, 6).order() == 6
        assert WPoint(fe(-3) + 2 * R3, fe(0)).order() == 2
        assert WPoint(fe(3) + 2 * R3, fe(12) + 6 * R3).order() == 6


class TestTorsion:
    def test_census(self):
        assert torsion_order_census() == {1: 1, 2: 3, 3: 2, 6: 6}

    def test_closure(self):
        pts = torsion_points()
        assert len(pts) == 12
        for p in pts:
            for q in pts:
                assert any(p + q == t for t in pts)

    def test_generator_not_torsion(self):
        for n in range(1, 25):
            assert not is_torsion(n * GENERATOR)

    def test_addition_table_structure(self):
        from ceviangeo.curve import torsion_addition_table

        table = torsion_addition_table()
        assert len(table) == 12
        # commutative Latin square with the identity in row 0
        assert table[0] == list(range(12))
        for i in range(12):
            assert sorted(table[i]) == list(range(12))
            for j in range(12):
                assert table[i][j] == table[j][i]

    def test_minimal_model_shift(self):
        import sympy

        u, v, x = sympy.symbols("u v x")
        shifted = (v ** 2 - u * (u ** 2 + 6 * u - 3)).subs(u, x - 2)
        assert sympy.expand(shifted - (v ** 2 - (x ** 3 - 15 * x + 22))) == 0


class TestBirationalChain:
    def test_symbolic_square_completion(self):
        # multiplying the normal form by 4(3x+1) and completing the square
        # must produce exactly the stated quartic in Y = (3x+1)(2y+x-1)
        import sympy

        x, y = sympy.symbols("x y")
        eq = (3 * x + 1) * y ** 2 + (3 * x + 1) * (x - 1) * y + x ** 2 - x
        big_y = (3 * x + 1) * (2 * y + x - 1)
        quartic = (x - 1) * (3 * x + 1) * (3 * x ** 2 - 6 * x - 1)
        assert sympy.expand(big_y ** 2 - quartic - 4 * (3 * x + 1) * eq) == 0

    def test_symbolic_weierstrass_transport(self):
        import sympy

        u, v = sympy.symbols("u v")
        X = (u - 1) / (u + 3)
        Y = 8 * v / (u + 3) ** 2
        quartic = (X - 1) * (3 * X + 1) * (3 * X ** 2 - 6 * X - 1)
        residual = sympy.simplify(Y ** 2 - quartic - (v ** 2 - u * (u ** 2 + 6 * u - 3)) * 64 / (u + 3) ** 4)
        assert residual == 0

    def test_symbolic_discriminant(self):
        import sympy

        x, y = sympy.symbols("x y")
        lead = 3 * x + 1
        disc = sympy.discriminant(lead * y ** 2 + lead * (x - 1) * y + x ** 2 - x, y)
        assert sympy.expand(disc - (x - 1) * (3 * x + 1) * (3 * x ** 2 - 6 * x - 1)) == 0

    def test_generator_correspondence(self):
        p = point("[1,1+sqrt(2),1-sqrt(2)]")
        nf = bary_to_nf(p)
        assert nf.x == fe("1/3") and nf.y == (1 + R2) / 3
        assert nf_to_w(nf) == GENERATOR

    def test_median_point_images(self):
        nf = NFPoint.of(1 + fe("2/3") * R3, -R3 / 3)
        w = nf_to_w(nf)
        assert w == WPoint(fe(-3) - 2 * R3, fe(0))

    def test_roundtrip_samples(self):
        for p in sample_translation_points(50, seed=5):
            assert w_to_bary(bary_to_w(p)) == p
            nf = bary_to_nf(p)
            assert nf_to_bary(nf) == p
            assert w_to_nf(nf_to_w(nf)) == nf

    def test_exceptional_points(self):
        with pytest.raises(MapUndefined):
            w_to_nf(WPoint.infinity())
        with pytest.raises(MapUndefined):
            w_to_nf(WPoint.of(0, 0))
        with pytest.raises(MapUndefined):
            w_to_nf(WPoint.of(-3, 6))
        with pytest.raises(MapUndefined):
            nf_to_w(NFPoint.of(1, 0))

    def test_torsion_limits(self):
        images = [w_to_bary(t) for t in rational_torsion()]
        assert images == [
            A,
            BaryPoint(0, 1, -1),
            B,
            C,
            BaryPoint(1, 0, -1),
            BaryPoint(1, -1, 0),
        ]
        for t in rational_torsion():
            assert on_translation_locus(w_to_bary(t))

    def test_median_torsion_correspondence(self):
        images = [w_to_bary(t) for t in torsion_points()[6:]]
        targets = median_torsion_bary()
        for img in images:
            assert any(img == t for t in targets)
        for t in targets:
            assert any(img == t for img in images)
            assert on_translation_locus(t)

    def test_off_curve_rejected(self):
        with pytest.raises(OffCurve):
            bary_to_nf(point([6, 3, 2]))
        with pytest.raises(OffCurve):
            NFPoint.of(2, 2)


class TestCubic:
    def test_membership(self):
        assert on_translation_locus(point("[1,1+sqrt(2),1-sqrt(2)]"))
        assert on_translation_locus(point("[1,-2+sqrt(3),-2+sqrt(3)]"))
        assert not on_translation_locus(point([6, 3, 2]))
        # 6*25 + 3*64 + 2*81 = 504
        assert translation_cubic(point([6, 3, 2])) == 504

    def test_infinite_points_on_cubic(self):
        for v in (BaryPoint(0, 1, -1), BaryPoint(1, 0, -1), BaryPoint(1, -1, 0)):
            assert on_translation_locus(v)

    def test_discriminant_matches_product(self):
        rng = random.Random(3)
        for _ in range(20):
            x = fe(Fraction(rng.randint(-30, 30), rng.randint(1, 7)))
            target = (x - 1) * (3 * x + 1) * (3 * x * x - 6 * x - 1)
            assert translation_y_discriminant(x) == target


class TestSampler:
    def test_samples_are_valid_translation_points(self):
        from ceviangeo.maps import classify_transfer, is_valid_point

        pts = sample_translation_points(6, seed=1)
        assert len(pts) == 6
        for p in pts:
            assert on_translation_locus(p)
            assert is_valid_point(p, off_medians=True)
        assert classify_transfer(pts[0]).is_translation()

    def test_deterministic(self):
        a = sample_translation_points(5, seed=9)
        b = sample_translation_points(5, seed=9)
        assert all(x == y for x, y in zip(a, b))

    def test_samples_live_over_sqrt2(self):
        for p in sample_translation_points(10, seed=2):
            assert all(c.minimal().tower in ((), (2,)) for c in p.coords)


class TestNormalFormFamily:
    def test_excluded_parameters(self):
        for a in (3, 0, -1, 9):
            with pytest.raises(BadParameter):
                NormalFormCurve(a)

    def test_origin_on_every_member(self):
        for a in (2, 5, -3, 7):
            assert NormalFormCurve(a).contains(0, 0)

    def test_no_real_point_when_disc_negative(self):
        # a=1, x=2: 3y^2 + 3y + 2 = 0 has discriminant 9 - 24 < 0
        curve = NormalFormCurve(1)
        assert curve.y_discriminant(fe(2)).sign() < 0
        assert curve.points_at(fe(2)) == []

    def test_sample_membership(self):
        curve = NormalFormCurve(2)
        for x, y in curve.sample(5, seed=4):
            assert curve.contains(x, y)

    def test_homothety_ratio_spot_check(self):
        from ceviangeo.maps import classify_transfer, is_valid_point

        curve = NormalFormCurve(5)
        found = 0
        for x, y in curve.sample(8, seed=2):
            p = BaryPoint(x, y, 1 - x - y)
            if not is_valid_point(p, off_medians=True):
                continue
            cls = classify_transfer(p)
            assert cls.kind == "homothety"
            assert cls.ratio == fe("2/3")
            found += 1
        assert found >= 3
