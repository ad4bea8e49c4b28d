"""Homogeneous barycentric algebra over a reference triangle.

Points and lines share one representation (a triple up to scale) and are
told apart by a role flag.  Joins and meets are both cross products.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import NonEquilateralFrame, PointAtInfinity, ProportionalTriples
from .kernel import (
    DEFAULT_TOL,
    Point,
    ToleranceProfile,
    Triangle,
    barycentric_signs,
    equilateral_residual,
    perpendicular_bisector,
)

POINT = "point"
LINE = "line"

# relative size of a cross product below which two triples are proportional
_PROPORTIONAL_FLOOR = 1e-12


@dataclass(frozen=True, slots=True)
class HomogeneousTriple:
    u: float
    v: float
    w: float
    role: str = POINT

    def __post_init__(self):
        if self.role not in (POINT, LINE):
            raise ValueError(f"unknown role {self.role!r}")
        if self.u == 0.0 and self.v == 0.0 and self.w == 0.0:
            raise ValueError("homogeneous triple cannot be all zero")
        if not all(math.isfinite(t) for t in (self.u, self.v, self.w)):
            raise ValueError("homogeneous triple must be finite")

    def __iter__(self):
        return iter((self.u, self.v, self.w))

    def as_array(self) -> np.ndarray:
        return np.array([self.u, self.v, self.w])

    def canonical(self) -> HomogeneousTriple:
        """Divide by the entry of largest magnitude (first one on ties)."""
        entries = (self.u, self.v, self.w)
        k = max(range(3), key=lambda i: (abs(entries[i]), -i))
        s = entries[k]
        return HomogeneousTriple(
            entries[0] / s + 0.0, entries[1] / s + 0.0, entries[2] / s + 0.0, self.role
        )

    def proportional_to(self, other: HomogeneousTriple, tol: float = 1e-12) -> bool:
        return _cross_norm_ratio(self, other) < tol


def point(u, v, w) -> HomogeneousTriple:
    return HomogeneousTriple(float(u), float(v), float(w), POINT)


def line(u, v, w) -> HomogeneousTriple:
    return HomogeneousTriple(float(u), float(v), float(w), LINE)


def _cross(p: HomogeneousTriple, q: HomogeneousTriple) -> tuple[float, float, float]:
    return (
        p.v * q.w - p.w * q.v,
        p.w * q.u - p.u * q.w,
        p.u * q.v - p.v * q.u,
    )


def _cross_norm_ratio(p: HomogeneousTriple, q: HomogeneousTriple) -> float:
    c = _cross(p, q)
    return math.hypot(*c) / (math.hypot(p.u, p.v, p.w) * math.hypot(q.u, q.v, q.w))


def _require(t: HomogeneousTriple, role: str) -> None:
    if t.role != role:
        raise TypeError(f"expected a {role} triple, got a {t.role}")


def _join(p: HomogeneousTriple, q: HomogeneousTriple, role: str) -> HomogeneousTriple:
    if _cross_norm_ratio(p, q) < _PROPORTIONAL_FLOOR:
        raise ProportionalTriples(f"{p} and {q} are proportional")
    return HomogeneousTriple(*_cross(p, q), role).canonical()


def bary_line(p: HomogeneousTriple, q: HomogeneousTriple) -> HomogeneousTriple:
    """Line through two points."""
    _require(p, POINT)
    _require(q, POINT)
    return _join(p, q, LINE)


def bary_intersect(l1: HomogeneousTriple, l2: HomogeneousTriple) -> HomogeneousTriple:
    """Common point of two lines."""
    _require(l1, LINE)
    _require(l2, LINE)
    return _join(l1, l2, POINT)


def incidence(ln: HomogeneousTriple, pt: HomogeneousTriple) -> float:
    """Dot product of canonical forms; zero when ``pt`` lies on ``ln``."""
    _require(ln, LINE)
    _require(pt, POINT)
    a, b = ln.canonical(), pt.canonical()
    return a.u * b.u + a.v * b.v + a.w * b.w


def concurrency_det(l1, l2, l3) -> float:
    for ln in (l1, l2, l3):
        _require(ln, LINE)
    m = np.array([ln.canonical().as_array() for ln in (l1, l2, l3)])
    return float(np.linalg.det(m))


def concurrent(l1, l2, l3, tol: ToleranceProfile = DEFAULT_TOL) -> bool:
    """True when the three lines share a point, including a point at infinity."""
    return abs(concurrency_det(l1, l2, l3)) < tol.det_tol


def apexes(dp: float, eq: float, fr: float):
    """D = (-p:1:1), E = (1:-q:1), F = (1:1:-r)."""
    return point(-dp, 1, 1), point(1, -eq, 1), point(1, 1, -fr)


def reference_vertices():
    return point(1, 0, 0), point(0, 1, 0), point(0, 0, 1)


def flank_vertices(dp: float, eq: float, fr: float):
    """A = EZ.FY, B = FX.DZ, C = DY.EX computed by cross products."""
    X, Y, Z = reference_vertices()
    D, E, F = apexes(dp, eq, fr)
    A = bary_intersect(bary_line(E, Z), bary_line(F, Y))
    B = bary_intersect(bary_line(F, X), bary_line(D, Z))
    C = bary_intersect(bary_line(D, Y), bary_line(E, X))
    return A, B, C


def cevians(dp: float, eq: float, fr: float):
    """Lines AX, BY, CZ."""
    X, Y, Z = reference_vertices()
    A, B, C = flank_vertices(dp, eq, fr)
    return bary_line(A, X), bary_line(B, Y), bary_line(C, Z)


def perspector(dp: float, eq: float, fr: float) -> HomogeneousTriple:
    """Common point (p:q:r) of AX, BY, CZ."""
    return point(dp, eq, fr).canonical()


@dataclass(frozen=True)
class ReferenceFrame:
    t: Triangle


class Side(enum.Enum):
    YZ = (1, 2)
    ZX = (2, 0)
    XY = (0, 1)


def bary_to_cartesian(frame: ReferenceFrame, p: HomogeneousTriple,
                      tol: ToleranceProfile = DEFAULT_TOL) -> Point:
    _require(p, POINT)
    c = p.canonical()
    total = c.u + c.v + c.w
    if abs(total) < tol.det_tol:
        raise PointAtInfinity(f"{p} has zero coordinate sum")
    v1, v2, v3 = frame.t.vertices
    return Point(
        (c.u * v1.x + c.v * v2.x + c.w * v3.x) / total,
        (c.u * v1.y + c.v * v2.y + c.w * v3.y) / total,
    )


def cartesian_to_bary(frame: ReferenceFrame, p: Point) -> HomogeneousTriple:
    return point(*barycentric_signs(p, frame.t)).canonical()


def on_perpendicular_bisector_form(frame: ReferenceFrame, p: Point, side: Side,
                                   tol: ToleranceProfile = DEFAULT_TOL) -> float:
    """Distance of ``p`` from the perpendicular bisector of ``side``.

    Only meaningful on an equilateral frame, where (t:1:1) is exactly that
    bisector for side YZ.
    """
    if equilateral_residual(frame.t) >= tol.angle_tol:
        raise NonEquilateralFrame("reference triangle is not equilateral")
    i, j = side.value
    verts = frame.t.vertices
    return abs(perpendicular_bisector(verts[i], verts[j]).residual(p))
