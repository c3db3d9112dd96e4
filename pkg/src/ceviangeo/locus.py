"""Vertex positions of the generalized orthocenter and the inscribed-triangle
construction of the translation locus.

The base points whose generalized orthocenter lands on a vertex form three
conics (minus four points each) with rational parametrizations.  A special
pair of base points on the line through the centroid parallel to a side
realizes both a vertex orthocenter and a translation transfer map; from any
translation point one builds a parallelogram-plus-hyperbola frame in which
inscribed triangles with a fixed centroid reconstruct the whole translation
locus through affine maps.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import FieldElement, fe, ZERO, ONE
from .plane import (
    A,
    B,
    C,
    D0,
    E0,
    F0,
    G,
    BaryLine,
    BaryPoint,
    affine_combination,
    infinite_point_of,
    join,
    meet,
    midpoint,
    point,
    signed_ratio,
)
from .maps import (
    AffineMap,
    Configuration,
    cevian_traces,
    classify_transfer,
    complement,
    anticomplement,
    derive_configuration,
    map_from_triangles,
    validate_point,
)
from .conics import (
    Conic,
    ConstructionError,
    affine_type,
    conic_through,
    intersect_line,
    intersect_shared_infinity,
    reflect_conic,
)
from . import curve as _curve


class LocusError(Exception):
    pass


class ExcludedParameter(LocusError):
    pass


class NotTranslation(LocusError):
    pass


class NotOnConic(LocusError):
    pass


class NoIntersection(LocusError):
    pass


class DegenerateInscribed(LocusError):
    pass


_PERMUTE = {
    "A": lambda p: p,
    "B": lambda p: (p[2], p[0], p[1]),
    "C": lambda p: (p[1], p[2], p[0]),
}


@dataclass(frozen=True)
class VertexLocus:
    """The conic of base points whose orthocenter is the given vertex,
    together with the four excluded points on it."""

    vertex: str
    conic: Conic
    excluded: tuple[BaryPoint, BaryPoint, BaryPoint, BaryPoint]

    def point_at(self, t) -> BaryPoint:
        """Rational parametrization by the pencil of lines through the first
        excluded vertex; parameters 0, 1 and -1 hit excluded points."""
        t = fe(t)
        if t == 0 or t == 1 or t == -1:
            raise ExcludedParameter(f"parameter {t} lands on an excluded point")
        base = (1 + t, 1 - t, t * (1 + t))
        return BaryPoint(*_PERMUTE[self.vertex](base))


def vertex_locus(vertex: str) -> VertexLocus:
    if vertex not in _PERMUTE:
        raise ValueError("vertex must be 'A', 'B' or 'C'")
    half = fe(1) / 2
    base_m = (
        (fe(-1), half, half),
        (half, ZERO, half),
        (half, half, ZERO),
    )
    perm = _PERMUTE[vertex]
    # conjugate the quadratic form by the inverse of the point permutation
    idx = {"A": (0, 1, 2), "B": (2, 0, 1), "C": (1, 2, 0)}[vertex]
    m = tuple(tuple(base_m[idx[i]][idx[j]] for j in range(3)) for i in range(3))
    excluded = tuple(BaryPoint(*perm(p.coords)) for p in (B, C, E0, F0))
    return VertexLocus(vertex, Conic(m), excluded)


def orthocenter_vertex(p: BaryPoint) -> str | None:
    """The vertex the generalized orthocenter of p equals, or None."""
    validate_point(p)
    h = derive_configuration(p).h
    for name, vertex in (("A", A), ("B", B), ("C", C)):
        if h == vertex:
            return name
    return None


@dataclass(frozen=True)
class VertexConditionProfile:
    """The four equivalent characterizations of an orthocenter at vertex A."""

    orthocenter_at_a: bool
    parallelogram_afqe: bool
    f3_on_q_e0_line: bool
    e3_on_q_f0_line: bool

    def as_tuple(self):
        return (
            self.orthocenter_at_a,
            self.parallelogram_afqe,
            self.f3_on_q_e0_line,
            self.e3_on_q_f0_line,
        )

    def all_equal(self) -> bool:
        return len(set(self.as_tuple())) == 1


def _four_collinear(p1, p2, p3, p4) -> bool:
    pts = [p1, p2, p3, p4]
    for i in range(4):
        for j in range(i + 1, 4):
            if pts[i] != pts[j]:
                line = join(pts[i], pts[j])
                return all(line.contains(q) for q in pts)
    return True


def vertex_condition_profile(p: BaryPoint) -> VertexConditionProfile:
    """Evaluate the four orthocenter-at-A conditions exactly."""
    cfg = derive_configuration(p)
    _, e, f = cevian_traces(p)
    _, e3, f3 = cevian_traces(cfg.p_iso)
    an, en, fn, qn = (x.normalized() for x in (A, e, f, cfg.q))
    para = all(fn[i] - an[i] == qn[i] - en[i] for i in range(3)) and all(
        en[i] - an[i] == qn[i] - fn[i] for i in range(3)
    )
    return VertexConditionProfile(
        orthocenter_at_a=cfg.h == A,
        parallelogram_afqe=para,
        f3_on_q_e0_line=_four_collinear(f3, cfg.q, E0, complement(e3)),
        e3_on_q_f0_line=_four_collinear(e3, cfg.q, F0, complement(f3)),
    )


# ---------------------------------------------------------------------------
# the special configuration


def special_point(sign: int = 1) -> BaryPoint:
    """One of the two base points on the line through G parallel to BC that
    lie on the circumconic; orthocenter A, circumcenter the midpoint of BC."""
    r2 = FieldElement.root(2)
    s = r2 if sign >= 0 else -r2
    return BaryPoint(ONE, 1 + s, 1 - s)


def doubled_anticomplementary_line() -> BaryLine:
    """The image of sideline BC under the anticomplement map applied twice:
    the line parallel to BC through the reflection of A in the centroid-side
    midpoint."""
    from .maps import ANTICOMPLEMENT

    bc = BaryLine(1, 0, 0)
    return ANTICOMPLEMENT.apply_line(ANTICOMPLEMENT.apply_line(bc))


def special_configuration(sign: int = 1) -> Configuration:
    """The full derived configuration of the special point, with its defining
    relations checked on the way out."""
    from .conics import circumconic_of_line

    cfg = derive_configuration(special_point(sign))
    checks = [
        cfg.h == A,
        cfg.o == D0,
        signed_ratio(cfg.o, cfg.p_iso, cfg.p) == -3,
        cfg.circumconic == circumconic_of_line(doubled_anticomplementary_line()),
        classify_transfer(cfg.p).is_translation(),
    ]
    d3 = cevian_traces(cfg.p_iso)[0]
    checks.append(d3 == midpoint(A, cfg.p_iso))
    if not all(checks):
        raise ConstructionError("special configuration relations failed")
    return cfg


def equilateral_metric_checks(sign: int = 1) -> dict[str, bool]:
    """Exact squared-distance checks in the Cartesian embedding with
    A=(0,sqrt(3)), B=(-1,0), C=(1,0), an equilateral triangle of side 2."""
    r3 = FieldElement.root(3)

    def cart(p: BaryPoint):
        pn = p.normalized()
        return (pn[2] - pn[1], r3 * pn[0])

    def dist2(p, q):
        pu, pv = cart(p)
        qu, qv = cart(q)
        return (pu - qu) ** 2 + (pv - qv) ** 2

    cfg = special_configuration(sign)
    d = cevian_traces(cfg.p)[0]
    f3 = cevian_traces(cfg.p_iso)[2]
    a_tilde = anticomplement(A)
    return {
        "side_ab_sq_is_4": dist2(A, B) == 4,
        "side_bc_sq_is_4": dist2(B, C) == 4,
        "side_ca_sq_is_4": dist2(C, A) == 4,
        "d0_d_sq_is_2": dist2(D0, d) == 2,
        "a_q_sq_is_2": dist2(A, cfg.q) == 2,
        "b_f3_sq_is_2": dist2(B, f3) == 2,
        "p_iso_reflected_a_sq_is_8": dist2(cfg.p_iso, a_tilde) == 8,
    }


# ---------------------------------------------------------------------------
# the inscribed-triangle construction


@dataclass(frozen=True)
class ConstructionFrame:
    """The parallelogram-and-hyperbola scaffold built from a translation
    point: parallelogram h-u-p-v with center z, the distinguished point g,
    the midpoints q, q_iso and o of three sides, the reflected points o_iso
    and p_iso, the conic through p, q, h, q_iso, p_iso (a hyperbola), the
    secant points e, f of the line through g parallel to p p_iso, their
    midpoints toward g, and the infinite points of the two asymptotes."""

    h: BaryPoint
    u: BaryPoint
    p: BaryPoint
    v: BaryPoint
    z: BaryPoint
    g: BaryPoint
    o: BaryPoint
    q: BaryPoint
    q_iso: BaryPoint
    o_iso: BaryPoint
    p_iso: BaryPoint
    conic: Conic
    e: BaryPoint
    f: BaryPoint
    e_mid: BaryPoint
    f_mid: BaryPoint
    asymptote_points: tuple[BaryPoint, BaryPoint]
    t_p: AffineMap

    def axis(self) -> BaryLine:
        return join(self.g, self.z)


def _tangency_point(conic: Conic, line: BaryLine) -> BaryPoint:
    pts = intersect_line(conic, line, extend=True)
    if len(pts) != 1:
        raise ConstructionError("expected a tangent line")
    return pts[0]


def construction_frame(p: BaryPoint) -> ConstructionFrame:
    """Build the scaffold from a translation point off the medians."""
    validate_point(p, off_medians=True)
    if not classify_transfer(p).is_translation():
        raise NotTranslation(f"{p} is not a translation point")
    cfg = derive_configuration(p)
    conic = cfg.cevian_conic
    if affine_type(conic) != "hyperbola":
        raise ConstructionError("cevian conic of a translation point must be a hyperbola")
    direction = infinite_point_of(join(cfg.p, cfg.p_iso))
    secant = join(G, direction)
    pts = intersect_line(conic, secant, extend=True)
    if len(pts) != 2:
        raise ConstructionError("secant through g must cut the conic twice")
    axis = join(G, cfg.z)

    def side(x: BaryPoint) -> int:
        s = sum((axis.coords[i] * x.normalized()[i] for i in range(3)), ZERO)
        return s.sign()

    target = side(cfg.q_iso)
    if side(pts[0]) == target:
        e, f = pts
    else:
        f, e = pts
    if side(e) != target or side(f) == target:
        raise ConstructionError("secant points do not separate across the axis")
    e_mid = midpoint(e, G)
    f_mid = midpoint(G, f)
    a_inf = _tangency_point(conic, join(cfg.z, e_mid))
    b_inf = _tangency_point(conic, join(cfg.z, f_mid))
    if not (a_inf.is_infinite() and b_inf.is_infinite()):
        raise ConstructionError("asymptote tangency points must be infinite")
    frame = ConstructionFrame(
        h=cfg.h,
        u=cfg.u,
        p=cfg.p,
        v=cfg.v,
        z=cfg.z,
        g=G,
        o=cfg.o,
        q=cfg.q,
        q_iso=cfg.q_iso,
        o_iso=cfg.o_iso,
        p_iso=cfg.p_iso,
        conic=conic,
        e=e,
        f=f,
        e_mid=e_mid,
        f_mid=f_mid,
        asymptote_points=(a_inf, b_inf),
        t_p=cfg.t_p,
    )
    _check_frame(frame)
    return frame


def _check_frame(frame: ConstructionFrame) -> None:
    ok = (
        frame.z == midpoint(frame.h, frame.p)
        and frame.z == midpoint(frame.u, frame.v)
        and frame.q == midpoint(frame.p, frame.v)
        and frame.q_iso == midpoint(frame.h, frame.u)
        and frame.o == midpoint(frame.u, frame.p)
        and frame.g == meet(join(frame.u, frame.v), join(frame.h, frame.o))
        and frame.g == midpoint(frame.e, frame.f)
        and frame.conic == conic_through(frame.p, frame.q, frame.h, frame.q_iso, frame.p_iso)
    )
    if not ok:
        raise ConstructionError("frame invariants failed")


def half_turn_projectivity(frame: ConstructionFrame, y: BaryPoint) -> BaryPoint:
    """The order-3 projectivity of the axis: project the cevian-map image of
    a point of the axis back onto the axis from p."""
    axis = frame.axis()
    if not axis.contains(y):
        raise LocusError("argument must lie on the axis")
    image = frame.t_p.apply(y)
    if image == frame.p:
        raise LocusError("projectivity undefined: image coincides with p")
    return meet(join(frame.p, image), axis)


def centroid_complement(frame: ConstructionFrame, x: BaryPoint) -> BaryPoint:
    """The dilation about the frame's distinguished point with ratio -1/2."""
    return affine_combination([(frame.g, fe(3) / 2), (x, fe(-1) / 2)])


def reflected_conic(frame: ConstructionFrame, a1: BaryPoint) -> Conic:
    return reflect_conic(frame.conic, centroid_complement(frame, a1))


def inscribed_triangle(frame: ConstructionFrame, a1: BaryPoint) -> tuple[BaryPoint, BaryPoint]:
    """The unique triangle inscribed in the frame's conic with vertex a1 and
    centroid g: the other two vertices are the ordinary intersections of the
    conic with its reflection through the complement of a1."""
    if a1.is_infinite():
        raise NotOnConic("vertex must be an ordinary point")
    if not frame.conic.contains(a1):
        raise NotOnConic(f"{a1} is not on the frame conic")
    d0 = centroid_complement(frame, a1)
    other = reflected_conic(frame, a1)
    if other.contains(a1):
        raise DegenerateInscribed(f"{a1} lies on its own reflected conic")
    pts = [q for q in intersect_shared_infinity(frame.conic, other, extend=True)
           if not q.is_infinite()]
    if len(pts) != 2:
        raise NoIntersection("conic and reflected conic share no two ordinary points")
    b1, c1 = pts
    if midpoint(b1, c1) != d0:
        raise ConstructionError("intersection chord is not bisected as expected")
    # fix the labeling so orientation 1 is the orientation-preserving one
    if map_from_triangles((a1, b1, c1), (A, B, C)).det().sign() < 0:
        b1, c1 = c1, b1
    return b1, c1


def admissible(frame: ConstructionFrame, a1: BaryPoint) -> bool:
    """Whether a1 admits an inscribed triangle: the conic and the reflected
    conic must meet in two distinct real ordinary points and a1 must not lie
    on the reflected conic.  Decided by the sign of the discriminant of the
    radical-line intersection, never by square roots."""
    from .conics import IdenticalConics, _span_points, radical_line

    if not frame.conic.contains(a1):
        raise NotOnConic(f"{a1} is not on the frame conic")
    if a1.is_infinite():
        return False
    other = reflected_conic(frame, a1)
    if other.contains(a1):
        return False
    try:
        line = radical_line(frame.conic, other)
    except IdenticalConics:
        return False
    if line is None:
        return False
    p0, p1 = _span_points(line)
    a = frame.conic.evaluate(p1)
    b = frame.conic.pair(p0, p1)
    c = frame.conic.evaluate(p0)
    s0 = p0.coordinate_sum()
    s1 = p1.coordinate_sum()
    if a.is_zero():
        # p1 is one intersection point; the other sits at t = -c/(2b)
        if b.is_zero() or s1.is_zero():
            return False
        t = -c / (2 * b)
        return not (s0 + t * s1).is_zero()
    disc = b * b - a * c
    if disc.sign() <= 0:
        return False
    if s1.is_zero():
        # the line's infinite point is p1 itself, which is off the conic,
        # so both intersection points are ordinary
        return True
    t_inf = -s0 / s1
    at_inf = a * t_inf * t_inf + 2 * b * t_inf + c
    return not at_inf.is_zero()


def reconstruct_point(frame: ConstructionFrame, a1: BaryPoint, orientation: int = 1) -> BaryPoint:
    """Map the frame's base point through the affine map taking the inscribed
    triangle of a1 onto the reference triangle; the image lies on the
    translation locus."""
    b1, c1 = inscribed_triangle(frame, a1)
    if orientation == 2:
        b1, c1 = c1, b1
    elif orientation != 1:
        raise ValueError("orientation must be 1 or 2")
    amap = map_from_triangles((a1, b1, c1), (A, B, C))
    return amap.apply(frame.p)


def admissible_vertex_samples(frame: ConstructionFrame, n: int, seed: int = 0) -> list[BaryPoint]:
    """n admissible vertices on the frame conic over a depth-2 tower, pulled
    back from translation-locus samples through the parallelogram map."""
    out: list[BaryPoint] = []
    batch = max(2 * n, 6)
    for p2 in _curve.sample_translation_points(batch, seed=seed):
        if len(out) >= n:
            break
        if p2 == frame.p:
            continue
        try:
            cfg2 = derive_configuration(p2)
        except Exception:
            continue
        if cfg2.u is None:
            continue
        pull = map_from_triangles((cfg2.h, cfg2.u, cfg2.p), (frame.h, frame.u, frame.p))
        a1 = pull.apply(A)
        if not frame.conic.contains(a1):
            raise ConstructionError("pullback vertex left the frame conic")
        if any(a1 == prev for prev in out):
            continue
        if admissible(frame, a1):
            out.append(a1)
    if len(out) < n:
        raise LocusError(f"could only build {len(out)} admissible samples")
    return out


def canonical_frame() -> ConstructionFrame:
    return construction_frame(special_point(1))
