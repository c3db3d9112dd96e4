"""The elliptic curve carrying the translation locus, in four models.

The locus of base points whose transfer map is a translation is the
projective cubic x(y+z)^2 + y(x+z)^2 + z(x+y)^2 = 0.  In absolute
coordinates it becomes the normal form (3x+1)y^2 + (3x+1)(x-1)y + x^2-x = 0,
a member of the family E_a with parameter a = 3; completing the square and a
Moebius change of variable carry it to the Weierstrass model
v^2 = u(u^2 + 6u - 3), where the chord-tangent group law lives.  This module
implements the models, the birational maps between them (with the explicit
limit table at their exceptional points), the group law, the torsion group,
and seeded samplers used by the verification suites.

Shifting u by 2 puts the Weierstrass model in the minimal form
v^2 = u^3 - 15u + 22 (Cremona label 36a2), whose Mordell-Weil rank over Q
is zero; here that fact is not recomputed, and the bounded checks that the
generator's first 24 multiples avoid the torsion group stand in for it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .field import FieldElement, fe, sqrt_extending, ZERO
from .plane import A, BaryPoint
from . import maps as _maps


class CurveError(Exception):
    pass


class OffCurve(CurveError):
    pass


class MapUndefined(CurveError):
    """The birational chain is not defined at this point; the reason names
    the exceptional locus."""


class BadParameter(CurveError):
    pass


# Weierstrass coefficients of v^2 = u^3 + 6u^2 - 3u
_A2 = fe(6)
_A4 = fe(-3)


def _rhs(u: FieldElement) -> FieldElement:
    return u * (u * u + 6 * u - 3)


@dataclass(frozen=True)
class WPoint:
    """A point of v^2 = u(u^2+6u-3), or the point at infinity."""

    u: FieldElement | None
    v: FieldElement | None

    def __post_init__(self):
        if (self.u is None) != (self.v is None):
            raise ValueError("both coordinates or neither")
        if self.u is not None and _rhs(self.u) != self.v * self.v:
            raise OffCurve(f"({self.u}, {self.v}) is not on the curve")

    @classmethod
    def infinity(cls) -> WPoint:
        return cls(None, None)

    @classmethod
    def of(cls, u, v) -> WPoint:
        return cls(fe(u), fe(v))

    def is_infinity(self) -> bool:
        return self.u is None

    def __neg__(self) -> WPoint:
        if self.is_infinity():
            return self
        return WPoint(self.u, -self.v)

    def __add__(self, other: WPoint) -> WPoint:
        if not isinstance(other, WPoint):
            return NotImplemented
        if self.is_infinity():
            return other
        if other.is_infinity():
            return self
        u1, v1, u2, v2 = self.u, self.v, other.u, other.v
        if u1 == u2:
            if (v1 + v2).is_zero():
                return WPoint.infinity()
            slope = (3 * u1 * u1 + 2 * _A2 * u1 + _A4) / (2 * v1)
        else:
            slope = (v2 - v1) / (u2 - u1)
        u3 = slope * slope - _A2 - u1 - u2
        v3 = -(v1 + slope * (u3 - u1))
        return WPoint(u3, v3)

    def __sub__(self, other: WPoint) -> WPoint:
        return self + (-other)

    def __rmul__(self, n: int) -> WPoint:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (-n) * (-self)
        acc = WPoint.infinity()
        base = self
        while n:
            if n & 1:
                acc = acc + base
            base = base + base
            n >>= 1
        return acc

    def double(self) -> WPoint:
        return self + self

    def order(self, bound: int = 16) -> int | None:
        """The order of the point in the group, or None if above the bound."""
        acc = self
        for n in range(1, bound + 1):
            if acc.is_infinity():
                return n
            acc = acc + self
        return None

    def __repr__(self):
        if self.is_infinity():
            return "WPoint(infinity)"
        return f"WPoint({self.u!r}, {self.v!r})"


GENERATOR = WPoint.of(3, FieldElement.root(2) * 6)


def curve_invariants() -> dict[str, Fraction]:
    """Standard invariants b2, b4, b6, b8, c4, c6, disc and j of the curve."""
    a1 = a3 = a6 = Fraction(0)
    a2, a4 = Fraction(6), Fraction(-3)
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = (b2 * b6 - b4 * b4) / 4
    c4 = b2 * b2 - 24 * b4
    c6 = -(b2 ** 3) + 36 * b2 * b4 - 216 * b6
    disc = (c4 ** 3 - c6 ** 2) / 1728
    return {
        "b2": b2,
        "b4": b4,
        "b6": b6,
        "b8": b8,
        "c4": c4,
        "c6": c6,
        "disc": disc,
        "j": c4 ** 3 / disc,
    }


def j_invariant() -> Fraction:
    return curve_invariants()["j"]


def rational_torsion() -> list[WPoint]:
    """The six torsion points with rational coordinates."""
    return [
        WPoint.infinity(),
        WPoint.of(0, 0),
        WPoint.of(1, 2),
        WPoint.of(1, -2),
        WPoint.of(-3, 6),
        WPoint.of(-3, -6),
    ]


def torsion_points() -> list[WPoint]:
    """The full 12-element torsion group, defined over the tower with sqrt(3)."""
    r3 = FieldElement.root(3)
    extra = []
    for sgn in (1, -1):
        u = fe(-3) + 2 * sgn * r3
        extra.append(WPoint(u, ZERO))
    for sgn in (1, -1):
        u = fe(3) + 2 * sgn * r3
        v = fe(12) + 6 * sgn * r3
        extra.append(WPoint(u, v))
        extra.append(WPoint(u, -v))
    return rational_torsion() + extra


def torsion_order_census() -> dict[int, int]:
    census: dict[int, int] = {}
    for p in torsion_points():
        n = p.order(12)
        census[n] = census.get(n, 0) + 1
    return census


def torsion_addition_table() -> list[list[int]]:
    """The 12x12 group table of the torsion points, as indices into
    torsion_points(); raises if the set were not closed under addition."""
    pts = torsion_points()
    table = []
    for p in pts:
        row = []
        for q in pts:
            s = p + q
            row.append(next(i for i, t in enumerate(pts) if t == s))
        table.append(row)
    return table


def is_torsion(p: WPoint) -> bool:
    return any(p == t for t in torsion_points())


# ---------------------------------------------------------------------------
# the normal-form family and the barycentric cubic


class NormalFormCurve:
    """The family (a*x+1)y^2 + (a*x+1)(x-1)y + x^2 - x = 0.

    Points of the member with parameter a, read as absolute barycentric
    coordinates (x, y, 1-x-y), are exactly the base points whose transfer
    map is a homothety with ratio 4/(a+1); parameters 3, 0, -1 and 9 are
    excluded.
    """

    EXCLUDED = (3, 0, -1, 9)

    def __init__(self, a):
        a = fe(a)
        if any(a == bad for bad in self.EXCLUDED):
            raise BadParameter(f"parameter {a} is excluded")
        self.a = a

    def residual(self, x, y) -> FieldElement:
        x, y = fe(x), fe(y)
        lead = self.a * x + 1
        return lead * y * y + lead * (x - 1) * y + x * x - x

    def contains(self, x, y) -> bool:
        return self.residual(x, y).is_zero()

    def y_discriminant(self, x) -> FieldElement:
        """Discriminant of the defining equation in y at a given x."""
        x = fe(x)
        lead = self.a * x + 1
        return lead * lead * (x - 1) * (x - 1) - 4 * lead * (x * x - x)

    def points_at(self, x) -> list[tuple[FieldElement, FieldElement]]:
        """The (up to two) real curve points above x, adjoining one square
        root when necessary."""
        x = fe(x)
        lead = self.a * x + 1
        if lead.is_zero():
            return []
        disc = self.y_discriminant(x)
        if disc.sign() < 0:
            return []
        root = sqrt_extending(disc)
        xr = x.in_tower(root.tower)
        out = []
        for sgn in (1, -1):
            y = (-(self.a * xr + 1) * (xr - 1) + sgn * root) / (2 * (self.a * xr + 1))
            out.append((xr, y))
        if root.is_zero():
            out = out[:1]
        return out

    def sample(self, n: int, seed: int = 0) -> list[tuple[FieldElement, FieldElement]]:
        """n seeded points with rational x, each over a tower of depth <= 1."""
        rng = random.Random(seed)
        out = []
        seen = set()
        while len(out) < n:
            x = Fraction(rng.randint(-40, 40), rng.randint(1, 12))
            if x in seen or x in (0, 1):
                continue
            seen.add(x)
            for pt in self.points_at(x):
                if len(out) < n and not pt[1].is_zero():
                    out.append(pt)
        return out


def translation_cubic(p: BaryPoint) -> FieldElement:
    """The projective cubic whose zero locus is the translation locus."""
    x, y, z = p.coords
    return x * (y + z) ** 2 + y * (x + z) ** 2 + z * (x + y) ** 2


def translation_y_discriminant(x) -> FieldElement:
    """Discriminant in y of the translation normal form at a given x."""
    x = fe(x)
    lead = 3 * x + 1
    return lead * lead * (x - 1) * (x - 1) - 4 * lead * (x * x - x)


def on_translation_locus(p: BaryPoint) -> bool:
    return translation_cubic(p).is_zero()


@dataclass(frozen=True)
class NFPoint:
    """An affine point (x, y) of the translation-locus normal form."""

    x: FieldElement
    y: FieldElement

    def __post_init__(self):
        lead = 3 * self.x + 1
        res = lead * self.y ** 2 + lead * (self.x - 1) * self.y + self.x ** 2 - self.x
        if not res.is_zero():
            raise OffCurve(f"({self.x}, {self.y}) is not on the normal-form curve")

    @classmethod
    def of(cls, x, y) -> NFPoint:
        return cls(fe(x), fe(y))


def bary_to_nf(p: BaryPoint) -> NFPoint:
    if not on_translation_locus(p):
        raise OffCurve(f"{p} is not on the translation locus")
    if p.is_infinite():
        raise MapUndefined("infinite points have no absolute coordinates")
    x, y, _ = p.normalized()
    return NFPoint(x, y)


def nf_to_bary(p: NFPoint) -> BaryPoint:
    return BaryPoint(p.x, p.y, 1 - p.x - p.y)


def nf_to_w(p: NFPoint) -> WPoint:
    """Complete the square (Y = (3x+1)(2y+x-1), with Y^2 equal to the
    discriminant (x-1)(3x+1)(3x^2-6x-1)) and move the quartic to the
    Weierstrass model by u = (3x+1)/(1-x), v = Y(u+3)^2/8."""
    if p.x == 1:
        raise MapUndefined("x=1 corresponds to the point at infinity")
    big_y = (3 * p.x + 1) * (2 * p.y + p.x - 1)
    u = (3 * p.x + 1) / (1 - p.x)
    v = big_y * (u + 3) ** 2 / 8
    return WPoint(u, v)


def w_to_nf(w: WPoint) -> NFPoint:
    if w.is_infinity():
        raise MapUndefined("the base point maps to the vertex (1:0:0)")
    if w.u == -3:
        raise MapUndefined("u=-3 corresponds to an infinite barycentric point")
    if w.u.is_zero():
        raise MapUndefined("u=0 corresponds to an infinite barycentric point")
    x = (w.u - 1) / (w.u + 3)
    big_y = 8 * w.v / (w.u + 3) ** 2
    y = (big_y / (3 * x + 1) - (x - 1)) / 2
    return NFPoint(x, y)


def _torsion_bary_limits() -> list[tuple[WPoint, BaryPoint]]:
    # limits of the birational chain at its exceptional torsion points,
    # computed by expanding the chain along a local parameter
    return [
        (WPoint.infinity(), A),
        (WPoint.of(0, 0), BaryPoint(0, 1, -1)),
        (WPoint.of(-3, 6), BaryPoint(1, 0, -1)),
        (WPoint.of(-3, -6), BaryPoint(1, -1, 0)),
    ]


def w_to_bary(w: WPoint) -> BaryPoint:
    """Total map from the Weierstrass model to the projective cubic, using
    the documented limits at the exceptional points of the chain."""
    for wp, bary in _torsion_bary_limits():
        if w == wp:
            return bary
    return nf_to_bary(w_to_nf(w))


def bary_to_w(p: BaryPoint) -> WPoint:
    for wp, bary in _torsion_bary_limits():
        if p == bary:
            return wp
    return nf_to_w(bary_to_nf(p))


def median_torsion_bary() -> list[BaryPoint]:
    """The six translation-locus points on the medians, in conjugate pairs."""
    r3 = FieldElement.root(3)
    lo = fe(-2) + r3
    hi = fe(-2) - r3
    return [
        BaryPoint(1, lo, lo),
        BaryPoint(1, hi, hi),
        BaryPoint(lo, 1, lo),
        BaryPoint(hi, 1, hi),
        BaryPoint(lo, lo, 1),
        BaryPoint(hi, hi, 1),
    ]


def sample_translation_points(n: int, seed: int = 0) -> list[BaryPoint]:
    """n distinct valid base points on the translation locus over the tower
    with sqrt(2), built as small signed multiples of the generator plus
    rational torsion (so coordinate heights stay moderate)."""
    rng = random.Random(seed)
    torsion = rational_torsion()
    out: list[BaryPoint] = []
    tried = set()
    span = max(2, (n + len(torsion) - 1) // len(torsion) + 1)
    while len(out) < n:
        k = rng.randint(1, span) * rng.choice((1, -1))
        ti = rng.randrange(len(torsion))
        if (k, ti) in tried:
            span += 1
            continue
        tried.add((k, ti))
        w = k * GENERATOR + torsion[ti]
        try:
            p = w_to_bary(w)
        except MapUndefined:
            continue
        if not _maps.is_valid_point(p, off_medians=True):
            continue
        if any(p == q for q in out):
            continue
        out.append(p)
    return out
