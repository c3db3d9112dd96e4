"""Deterministic SVG figures from exact geometry.

Conics are traced through an exact rational second-intersection sweep (no
square roots are ever taken); coordinates become decimal only at the output
boundary, at twelve significant digits.  Paths are reserved for conics;
segments and markers use line, circle and text elements, so a figure's
conic count equals its path count.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .field import FieldElement
from .plane import A, B, C, G, BaryPoint, point
from .conics import Conic
from . import conics as conics_mod
from . import locus as locus_mod
from . import maps as maps_mod


class DegeneratePlacement(Exception):
    pass


def _fe_float(x: FieldElement) -> float:
    m = x.minimal()
    from .field import _directions

    value = float(m.coeffs[0])
    for rad, (i, mult) in _directions(m.tower).items():
        value += float(m.coeffs[i]) * mult * math.sqrt(rad)
    return value


class Placement:
    """Cartesian positions for the reference triangle's vertices."""

    def __init__(self, coords):
        vals = [Fraction(c) for c in coords]
        if len(vals) != 6:
            raise DegeneratePlacement("placement needs six coordinates")
        self.ax, self.ay, self.bx, self.by, self.cx, self.cy = vals
        area2 = (self.bx - self.ax) * (self.cy - self.ay) - (self.cx - self.ax) * (
            self.by - self.ay
        )
        if area2 == 0:
            raise DegeneratePlacement("the three placed vertices are collinear")

    @classmethod
    def default(cls) -> Placement:
        return cls((0, 2, -1, 0, Fraction(3, 2), 0))

    def locate(self, p: BaryPoint) -> tuple[float, float]:
        w = p.normalized()
        x = _fe_float(w[0]) * float(self.ax) + _fe_float(w[1]) * float(self.bx) + _fe_float(
            w[2]
        ) * float(self.cx)
        y = _fe_float(w[0]) * float(self.ay) + _fe_float(w[1]) * float(self.by) + _fe_float(
            w[2]
        ) * float(self.cy)
        return x, y


def _fmt(v: float) -> str:
    return format(v, ".12g")


def _direction(chart: int, t: Fraction) -> BaryPoint:
    # two charts covering the projective line of directions
    if chart == 0:
        coords = (Fraction(1), t - 1, -t)
    else:
        coords = (t, 1 - t, Fraction(-1))
    return BaryPoint(*coords)


def conic_sweep(c: Conic, base: BaryPoint, steps: int = 96) -> list[BaryPoint | None]:
    """Exact points sweeping the conic once: the second intersection of the
    line through a base point of the conic in every direction.  None marks a
    direction where the point escapes to infinity (hyperbola branch gap)."""
    if not c.contains(base):
        raise ValueError("sweep base must lie on the conic")
    bn = BaryPoint(*base.normalized())
    out: list[BaryPoint | None] = []
    params = [Fraction(2 * k, steps) - 1 for k in range(steps + 1)]
    sweep = [(0, t) for t in params] + [(1, t) for t in reversed(params[:-1])]
    for chart, t in sweep:
        d = _direction(chart, t)
        qd = c.evaluate(d)
        bd = c.pair(bn, d)
        if qd.is_zero():
            out.append(None)  # asymptotic direction
            continue
        lam = -2 * bd / qd
        if lam.is_zero():
            # tangent direction at the base point: the sweep returns there
            out.append(bn)
            continue
        pt = BaryPoint(*(x + lam * y for x, y in zip(bn.coords, d.coords)))
        if pt.is_infinite():
            out.append(None)
        else:
            out.append(pt)
    return out


def _conic_path(c: Conic, base: BaryPoint, placement: Placement, steps: int = 96,
                span: float = 1e3) -> str:
    pieces: list[list[tuple[float, float]]] = [[]]
    for p in conic_sweep(c, base, steps):
        if p is None:
            if pieces[-1]:
                pieces.append([])
            continue
        x, y = placement.locate(p)
        if abs(x) > span or abs(y) > span:
            if pieces[-1]:
                pieces.append([])
            continue
        pieces[-1].append((x, y))
    parts = []
    for piece in pieces:
        if len(piece) < 2:
            continue
        coords = " L ".join(f"{_fmt(x)} {_fmt(-y)}" for x, y in piece)
        parts.append(f"M {coords}")
    return " ".join(parts)


class Figure:
    def __init__(self, placement: Placement):
        self.placement = placement
        self.paths: list[tuple[str, str]] = []
        self.lines: list[tuple[tuple[float, float], tuple[float, float], str]] = []
        self.points: list[tuple[tuple[float, float], str]] = []

    def add_conic(self, c: Conic, base: BaryPoint, color: str, steps: int = 96):
        self.paths.append((_conic_path(c, base, self.placement, steps), color))

    def add_segment(self, p: BaryPoint, q: BaryPoint, color: str = "#888888"):
        self.lines.append((self.placement.locate(p), self.placement.locate(q), color))

    def add_point(self, p: BaryPoint, label: str):
        self.points.append((self.placement.locate(p), label))

    def render(self) -> str:
        xs, ys = [], []
        for (x1, y1), (x2, y2), _ in self.lines:
            xs += [x1, x2]
            ys += [y1, y2]
        for (x, y), _ in self.points:
            xs.append(x)
            ys.append(y)
        if not xs:
            xs, ys = [0.0, 1.0], [0.0, 1.0]
        margin = 0.6
        x0, x1 = min(xs) - margin, max(xs) + margin
        y0, y1 = min(ys) - margin, max(ys) + margin
        view = f"{_fmt(x0)} {_fmt(-y1)} {_fmt(x1 - x0)} {_fmt(y1 - y0)}"
        stroke = (y1 - y0) / 240.0
        radius = stroke * 2.2
        font = stroke * 12
        body = []
        for d, color in self.paths:
            if d:
                body.append(
                    f'<path class="conic" d="{d}" fill="none" stroke="{color}" '
                    f'stroke-width="{_fmt(stroke)}"/>'
                )
        for (xa, ya), (xb, yb), color in self.lines:
            body.append(
                f'<line x1="{_fmt(xa)}" y1="{_fmt(-ya)}" x2="{_fmt(xb)}" y2="{_fmt(-yb)}" '
                f'stroke="{color}" stroke-width="{_fmt(stroke)}"/>'
            )
        for (x, y), label in self.points:
            body.append(
                f'<circle cx="{_fmt(x)}" cy="{_fmt(-y)}" r="{_fmt(radius)}" fill="#222222"/>'
            )
            body.append(
                f'<text x="{_fmt(x + 2 * radius)}" y="{_fmt(-y - 2 * radius)}" '
                f'font-size="{_fmt(font)}">{label}</text>'
            )
        inner = "\n  ".join(body)
        return (
            '<svg xmlns="http://www.w3.org/2000/svg" width="800" height="600" '
            f'viewBox="{view}">\n  {inner}\n</svg>\n'
        )


def _triangle(fig: Figure):
    fig.add_segment(A, B)
    fig.add_segment(B, C)
    fig.add_segment(C, A)
    for p, label in ((A, "A"), (B, "B"), (C, "C"), (G, "G")):
        fig.add_point(p, label)


def figure_locus(placement: Placement) -> str:
    fig = Figure(placement)
    colors = {"A": "#cc2222", "B": "#7722aa", "C": "#22aa44"}
    for vertex in ("A", "B", "C"):
        vl = locus_mod.vertex_locus(vertex)
        base = vl.excluded[0]
        fig.add_conic(vl.conic, base, colors[vertex])
    fig.add_conic(conics_mod.steiner_circumellipse(), A, "#2255cc")
    _triangle(fig)
    return fig.render()


def figure_conics(placement: Placement) -> str:
    fig = Figure(placement)
    cfg = maps_mod.derive_configuration(point([6, 3, 2]))
    d = maps_mod.cevian_traces(cfg.p)[0]
    fig.add_conic(cfg.circumconic, A, "#cc4444")
    fig.add_conic(cfg.inconic, d, "#22aa44")
    _triangle(fig)
    for p, label in ((cfg.p, "P"), (cfg.q, "Q"), (cfg.h, "H"), (cfg.o, "O")):
        fig.add_point(p, label)
    return fig.render()


def figure_special(placement: Placement) -> str:
    fig = Figure(placement)
    cfg = locus_mod.special_configuration(1)
    d = maps_mod.cevian_traces(cfg.p)[0]
    fig.add_conic(cfg.circumconic, A, "#cc4444")
    fig.add_conic(cfg.inconic, d, "#22aa44")
    _triangle(fig)
    fig.add_segment(cfg.p, cfg.p_iso, "#bbbbbb")
    for p, label in (
        (cfg.p, "P"),
        (cfg.p_iso, "P'"),
        (cfg.o, "O"),
        (cfg.o_iso, "O'"),
        (cfg.u, "U"),
        (cfg.z, "Z"),
    ):
        fig.add_point(p, label)
    return fig.render()


def figure_construction(placement: Placement) -> str:
    fig = Figure(placement)
    frame = locus_mod.canonical_frame()
    fig.add_conic(frame.conic, frame.h, "#aa6622", steps=192)
    _triangle(fig)
    for a, b in (
        (frame.h, frame.u),
        (frame.u, frame.p),
        (frame.p, frame.v),
        (frame.v, frame.h),
    ):
        fig.add_segment(a, b, "#5577cc")
    fig.add_segment(frame.e, frame.f, "#bbbbbb")
    for p, label in (
        (frame.h, "H"),
        (frame.u, "U"),
        (frame.p, "P"),
        (frame.v, "V"),
        (frame.z, "Z"),
        (frame.e, "E"),
        (frame.f, "F"),
    ):
        fig.add_point(p, label)
    return fig.render()


FIGURES = {
    "locus": figure_locus,
    "conics": figure_conics,
    "special": figure_special,
    "construction": figure_construction,
}


def render_figure(name: str, placement: Placement | None = None) -> str:
    if name not in FIGURES:
        raise KeyError(f"unknown figure {name!r}; choose from {sorted(FIGURES)}")
    return FIGURES[name](placement or Placement.default())
