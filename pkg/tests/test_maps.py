import random
from fractions import Fraction

import pytest

from ceviangeo.field import FieldElement, fe
from ceviangeo.plane import (
    A,
    B,
    C,
    D0,
    G,
    BaryPoint,
    InfinitePointArgument,
    join,
    midpoint,
    point,
)
from ceviangeo.maps import (
    ANTICOMPLEMENT,
    COMPLEMENT,
    AffineMap,
    DegenerateTriangle,
    OnAnticomplementarySideline,
    OnMedian,
    OnSideline,
    OnSteinerCircumellipse,
    VertexArgument,
    anticomplement,
    cevian_map,
    cevian_traces,
    classify_transfer,
    complement,
    derive_configuration,
    eta_reflection,
    is_valid_point,
    isotom_complement,
    isotomic,
    map_from_triangles,
    orthocenter_matches_definition,
    transfer_center_formula,
    transfer_map,
    validate_point,
)

R2 = FieldElement.root(2)


def random_valid(rng, off_medians=False):
    while True:
        coords = [Fraction(rng.randint(-7, 7), rng.randint(1, 5)) for _ in range(3)]
        if not any(coords):
            continue
        p = BaryPoint(*coords)
        if is_valid_point(p, off_medians=off_medians):
            return p


class TestBasicMaps:
    def test_complement_vertex(self):
        assert complement(A) == D0

    def test_complement_fixes_centroid(self):
        assert complement(G) == G
        assert isotomic(G) == G

    def test_complement_inverse(self):
        p = point([6, 3, 2])
        assert anticomplement(complement(p)) == p
        assert complement(anticomplement(p)) == p

    def test_complement_fixes_infinite(self):
        v = BaryPoint(0, 1, -1)
        assert complement(v) == v

    def test_isotomic(self):
        assert isotomic(point([6, 3, 2])) == point([1, 2, 3])
        assert isotomic(point("[1,1+sqrt(2),1-sqrt(2)]")) == point(
            "[0-1,1-sqrt(2),1+sqrt(2)]"
        )

    def test_isotomic_involution_random(self):
        rng = random.Random(4)
        for _ in range(25):
            p = random_valid(rng)
            assert isotomic(isotomic(p)) == p

    def test_isotomic_on_sideline(self):
        with pytest.raises(OnSideline):
            isotomic(BaryPoint(0, 1, 2))

    def test_isotom_complement(self):
        assert isotom_complement(point([6, 3, 2])) == point([5, 4, 3])
        assert isotom_complement(point("[1,1+sqrt(2),1-sqrt(2)]")) == BaryPoint(
            2, R2, -R2
        )
        rng = random.Random(8)
        for _ in range(15):
            p = random_valid(rng)
            assert isotom_complement(p) == complement(isotomic(p))

    def test_cevian_traces(self):
        d, e, f = cevian_traces(point([6, 3, 2]))
        assert d == BaryPoint(0, 3, 2)
        assert e == BaryPoint(3, 0, 1)
        assert f == BaryPoint(2, 1, 0)
        with pytest.raises(VertexArgument):
            cevian_traces(A)


class TestAffineMaps:
    def test_identity_from_triangles(self):
        m = map_from_triangles((A, B, C), (A, B, C))
        assert m == AffineMap.identity()

    def test_medial_map_is_complement(self):
        m = map_from_triangles((A, B, C), (D0, point([1, 0, 1]), point([1, 1, 0])))
        assert m == COMPLEMENT
        assert cevian_map(G) == COMPLEMENT

    def test_cevian_map_column(self):
        t = cevian_map(point([6, 3, 2]))
        assert t.apply(A) == BaryPoint(0, fe("3/5"), fe("2/5"))

    def test_degenerate_triangle(self):
        with pytest.raises(DegenerateTriangle):
            map_from_triangles((A, B, C), (A, B, midpoint(A, B)))

    def test_composition_inverse(self):
        rng = random.Random(12)
        p = random_valid(rng)
        t = cevian_map(p)
        assert (t @ t.inverse()) == AffineMap.identity()

    def test_line_image(self):
        # the complement of line BC is the midline through E0 and F0
        bc = join(B, C)
        img = COMPLEMENT.apply_line(bc)
        assert img == join(point([1, 0, 1]), point([1, 1, 0]))


class TestValidity:
    def test_midline_points_are_valid(self):
        # (1:2:3) sits on x+y-z=0 yet every derived object is defined
        validate_point(point([1, 2, 3]))
        validate_point(point([6, 3, 2]))
        validate_point(point("[1,1+sqrt(2),1-sqrt(2)]"))

    def test_sideline(self):
        with pytest.raises(OnSideline):
            validate_point(BaryPoint(0, 1, 2))

    def test_anticomplementary_sideline(self):
        with pytest.raises(OnAnticomplementarySideline):
            validate_point(BaryPoint(5, 1, -1))

    def test_steiner(self):
        # xy+yz+zx = 0 at (6:3:-2): 18-6-12
        with pytest.raises(OnSteinerCircumellipse):
            validate_point(BaryPoint(6, 3, -2))

    def test_infinite(self):
        with pytest.raises(InfinitePointArgument):
            validate_point(BaryPoint(0, 1, -1))

    def test_median_flag(self):
        validate_point(G)
        with pytest.raises(OnMedian):
            validate_point(G, off_medians=True)
        with pytest.raises(OnMedian):
            validate_point(BaryPoint(2, 2, 1), off_medians=True)


class TestConfiguration:
    def test_worked_example(self):
        cfg = derive_configuration(point([6, 3, 2]))
        assert cfg.h == A
        assert cfg.o == D0
        assert cfg.q == point([5, 4, 3])

    def test_orthocenter_definition_random(self):
        rng = random.Random(21)
        for _ in range(10):
            cfg = derive_configuration(random_valid(rng))
            assert orthocenter_matches_definition(cfg)

    def test_circumcenter_is_complement_of_orthocenter(self):
        rng = random.Random(22)
        for _ in range(10):
            cfg = derive_configuration(random_valid(rng))
            assert cfg.o == complement(cfg.h)

    def test_transfer_symmetry(self):
        rng = random.Random(23)
        for _ in range(8):
            p = random_valid(rng)
            t1 = transfer_map(p)
            t2 = (cevian_map(isotomic(p)) @ ANTICOMPLEMENT @ cevian_map(p)).normalized()
            assert t1 == t2

    def test_special_translation_midpoint(self):
        cfg = derive_configuration(point("[1,1+sqrt(2),1-sqrt(2)]"))
        assert cfg.h == A
        assert cfg.o == D0
        assert cfg.u == midpoint(cfg.p, cfg.p_iso)
        assert cfg.u == BaryPoint(-1, 2 - R2, 2 + R2)

    def test_median_members_none(self):
        cfg = derive_configuration(G)
        assert cfg.h == G
        assert cfg.v is None and cfg.z is None and cfg.u is None and cfg.s is None

    def test_configuration_center_z(self):
        rng = random.Random(24)
        for _ in range(6):
            cfg = derive_configuration(random_valid(rng, off_medians=True))
            # z is the pole of the infinite line of the cevian conic
            from ceviangeo.conics import conic_center

            assert cfg.z == conic_center(cfg.cevian_conic)
            assert cfg.u == anticomplement(cfg.z)


class TestClassification:
    def test_centroid_homothety(self):
        cls = classify_transfer(G)
        assert cls.kind == "homothety"
        assert cls.ratio == fe("-1/2")
        assert cls.center == G

    def test_worked_homothety(self):
        cls = classify_transfer(point([6, 3, 2]))
        assert cls.kind == "homothety"
        assert cls.ratio == fe("-2/5")
        assert cls.center == point([25, 32, 27])

    def test_translation(self):
        cls = classify_transfer(point("[1,1+sqrt(2),1-sqrt(2)]"))
        assert cls.is_translation()
        assert cls.center.is_infinite()

    def test_center_formula_agreement(self):
        rng = random.Random(31)
        for _ in range(12):
            p = random_valid(rng)
            cls = classify_transfer(p)
            assert cls.center == transfer_center_formula(p)

    def test_center_line_intersection_agreement(self):
        rng = random.Random(32)
        for _ in range(10):
            p = random_valid(rng, off_medians=True)
            cfg = derive_configuration(p)
            assert cfg.s == classify_transfer(p).center

    def test_formula_sum_vanishes_exactly_on_locus(self):
        from ceviangeo.curve import on_translation_locus

        rng = random.Random(33)
        for _ in range(12):
            p = random_valid(rng)
            s = transfer_center_formula(p)
            assert s.is_infinite() == on_translation_locus(p)


class TestEtaReflection:
    def test_swaps_isotomic_pair(self):
        cfg = derive_configuration(point([6, 3, 2]))
        eta = eta_reflection(cfg)
        assert eta.apply(cfg.p) == cfg.p_iso
        assert eta.apply(cfg.q) == cfg.q_iso
        assert (eta @ eta) == AffineMap.identity()

    def test_swaps_circumcenters_for_special_point(self):
        cfg = derive_configuration(point("[1,1+sqrt(2),1-sqrt(2)]"))
        eta = eta_reflection(cfg)
        assert eta.apply(cfg.o) == cfg.o_iso

    def test_fixes_axis(self):
        cfg = derive_configuration(point([6, 3, 2]))
        eta = eta_reflection(cfg)
        assert eta.apply(G) == G
        assert eta.apply(cfg.v) == cfg.v
        assert eta.apply(midpoint(G, cfg.v)) == midpoint(G, cfg.v)

    def test_median_error(self):
        cfg = derive_configuration(G)
        with pytest.raises(OnMedian):
            eta_reflection(cfg)
