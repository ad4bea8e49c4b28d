"""Deterministic SVG figures of a configuration.

Output is a pure function of the configuration and the style: coordinates
are printed with six fractional digits and elements always appear in the
same order (sides, cevians, construction lines, XYZ fill, points, labels).
"""
from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

from .constructions import MorleyConfiguration
from .kernel import Point, distance

LAYERS = ("trisectors", "bisectors", "flanks", "circumcircles", "labels", "cevians")


@dataclass(frozen=True)
class RenderStyle:
    width: int = 800
    height: int = 800
    margin: float = 0.08
    side_width: float = 2.0
    line_width: float = 1.0
    point_radius: float = 3.0
    trisectors: bool = True
    bisectors: bool = False
    flanks: bool = False
    circumcircles: bool = False
    labels: bool = True
    cevians: bool = False

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise ValueError("canvas dimensions must be positive")
        if not 0.0 <= self.margin < 0.4:
            raise ValueError("margin must lie in [0, 0.4)")
        if self.side_width <= 0 or self.line_width <= 0 or self.point_radius <= 0:
            raise ValueError("stroke widths must be positive")

    @classmethod
    def with_layers(cls, layers, **kw) -> RenderStyle:
        """Style with exactly the named layers switched on."""
        unknown = set(layers) - set(LAYERS)
        if unknown:
            raise ValueError(f"unknown layers: {', '.join(sorted(unknown))}")
        return cls(**{name: name in layers for name in LAYERS}, **kw)


def _num(v: float) -> str:
    s = f"{v:.6f}"
    return "0.000000" if s == "-0.000000" else s


class _Canvas:
    def __init__(self, pts: list[Point], style: RenderStyle):
        xs = [p.x for p in pts]
        ys = [p.y for p in pts]
        self.x0, self.x1 = min(xs), max(xs)
        self.y0, self.y1 = min(ys), max(ys)
        span_w = max(self.x1 - self.x0, 1e-12)
        span_h = max(self.y1 - self.y0, 1e-12)
        usable_w = style.width * (1.0 - 2.0 * style.margin)
        usable_h = style.height * (1.0 - 2.0 * style.margin)
        self.k = min(usable_w / span_w, usable_h / span_h)
        # centre the drawing; SVG y grows downward
        self.ox = 0.5 * style.width - self.k * 0.5 * (self.x0 + self.x1)
        self.oy = 0.5 * style.height + self.k * 0.5 * (self.y0 + self.y1)

    def xy(self, p: Point) -> tuple[str, str]:
        return _num(self.ox + self.k * p.x), _num(self.oy - self.k * p.y)


def _segments(cfg: MorleyConfiguration, pairs) -> list[tuple[Point, Point]]:
    return [(getattr(cfg, a), getattr(cfg, b)) for a, b in pairs]


def render_svg(cfg: MorleyConfiguration, style: RenderStyle = RenderStyle()) -> str:
    circles = []
    if style.circumcircles:
        for centre, through in (("P", "A"), ("Q", "B"), ("R", "C")):
            o = getattr(cfg, centre)
            circles.append((centre, o, distance(o, getattr(cfg, through))))

    labelled = ["A", "B", "C", "X", "Y", "Z"]
    if style.flanks or style.bisectors or style.trisectors:
        labelled += ["D", "E", "F"]
    if style.circumcircles:
        labelled += ["P", "Q", "R"]

    extent = [getattr(cfg, k) for k in labelled]
    for _, o, rad in circles:
        extent += [Point(o.x - rad, o.y - rad), Point(o.x + rad, o.y + rad)]
    cv = _Canvas(extent, style)

    def poly(pts, cls, extra):
        coords = " ".join(",".join(cv.xy(p)) for p in pts)
        return f'<polygon class="{cls}" points="{coords}" {extra}/>'

    def seg(p, q, cls, width):
        (x1, y1), (x2, y2) = cv.xy(p), cv.xy(q)
        return (f'<line class="{cls}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
                f'stroke="#444444" stroke-width="{_num(width)}"/>')

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{style.width}" height="{style.height}" '
        f'viewBox="0 0 {style.width} {style.height}">',
        poly((cfg.A, cfg.B, cfg.C), "sides",
             f'fill="none" stroke="#000000" stroke-width="{_num(style.side_width)}"'),
    ]
    if style.cevians:
        for p, q in _segments(cfg, ("AX", "BY", "CZ")):
            out.append(seg(p, q, "cevian", style.line_width))
    if style.trisectors:
        # each vertex sends one trisector to a Morley point and on to an apex
        for p, q in _segments(cfg, ("AE", "AF", "BF", "BD", "CD", "CE")):
            out.append(seg(p, q, "trisector", style.line_width))
    if style.flanks:
        for p, q in _segments(cfg, ("DY", "DZ", "EZ", "EX", "FX", "FY")):
            out.append(seg(p, q, "flank", style.line_width))
    if style.bisectors:
        for p, q in _segments(cfg, ("DX", "EY", "FZ")):
            out.append(seg(p, q, "bisector", style.line_width))
    for centre, o, rad in circles:
        x, y = cv.xy(o)
        out.append(f'<circle class="circumcircle" id="circ-{centre}" cx="{x}" cy="{y}" '
                   f'r="{_num(cv.k * rad)}" fill="none" stroke="#1f77b4" '
                   f'stroke-width="{_num(style.line_width)}"/>')
    out.append(poly((cfg.X, cfg.Y, cfg.Z), "morley",
                    'fill="#f4a261" fill-opacity="0.6" stroke="#c0392b" stroke-width="1.500000"'))
    r = style.point_radius
    for name in labelled:
        x, y = cv.xy(getattr(cfg, name))
        # drawn as a path so the only <circle> elements are circumcircles
        out.append(f'<path class="point" id="pt-{name}" d="M {x} {y} m -{_num(r)} 0 '
                   f'a {_num(r)} {_num(r)} 0 1 0 {_num(2 * r)} 0 '
                   f'a {_num(r)} {_num(r)} 0 1 0 -{_num(2 * r)} 0 Z" fill="#000000"/>')
    if style.labels:
        for name in labelled:
            x, y = cv.xy(getattr(cfg, name))
            out.append(f'<text class="label" x="{x}" y="{y}" dx="5" dy="-5" '
                       f'font-family="serif" font-size="16">{escape(name)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
