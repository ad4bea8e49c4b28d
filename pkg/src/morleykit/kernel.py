"""Double-precision Cartesian primitives shared by every other module.

Angles are radians and unsigned in [0, pi] unless a function says it is
oriented.  Lines are stored canonically so equal lines compare equal.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import (
    CoincidentPoints,
    CollinearPoints,
    DegenerateAngle,
    DegenerateTriangle,
    ParallelLines,
)

# Absolute floor below which two points are treated as the same point.
LENGTH_FLOOR = 1e-12
# Smallest interior angle (radians) a Triangle may have.
ANGLE_FLOOR = 1e-6
# Largest longest-side / shortest-side ratio a Triangle may have.
MAX_ASPECT = 1e8


@dataclass(frozen=True)
class ToleranceProfile:
    angle_tol: float = 1e-9
    length_tol_rel: float = 1e-9
    det_tol: float = 1e-9

    def __post_init__(self):
        for name in ("angle_tol", "length_tol_rel", "det_tol"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be strictly positive")


DEFAULT_TOL = ToleranceProfile()


@dataclass(frozen=True, slots=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite point ({self.x}, {self.y})")

    def __add__(self, other: Point) -> Point:
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, k: float) -> Point:
        return Point(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __truediv__(self, k: float) -> Point:
        return Point(self.x / k, self.y / k)

    def __neg__(self) -> Point:
        return Point(-self.x, -self.y)

    def dot(self, other: Point) -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: Point) -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def rotated(self, theta: float) -> Point:
        c, s = math.cos(theta), math.sin(theta)
        return Point(c * self.x - s * self.y, s * self.x + c * self.y)

    def as_tuple(self) -> tuple[float, float]:
        return (self.x, self.y)


def distance(p: Point, q: Point) -> float:
    return math.hypot(p.x - q.x, p.y - q.y)


def midpoint(p: Point, q: Point) -> Point:
    return Point(0.5 * (p.x + q.x), 0.5 * (p.y + q.y))


@dataclass(frozen=True, slots=True)
class Line:
    """The locus a*x + b*y + c = 0 with a^2 + b^2 = 1.

    The sign is fixed so that the first nonzero of (a, b) is positive.
    """

    a: float
    b: float
    c: float

    @classmethod
    def canonical(cls, a: float, b: float, c: float) -> Line:
        n = math.hypot(a, b)
        if n == 0.0:
            raise ValueError("line normal must be nonzero")
        a, b, c = a / n, b / n, c / n
        if a < 0.0 or (a == 0.0 and b < 0.0):
            a, b, c = -a, -b, -c
        # avoid -0.0 leaking into comparisons and output
        return cls(a + 0.0, b + 0.0, c + 0.0)

    def residual(self, p: Point) -> float:
        """Signed distance of ``p`` from the line."""
        return self.a * p.x + self.b * p.y + self.c

    @property
    def direction(self) -> Point:
        return Point(-self.b, self.a)


@dataclass(frozen=True, slots=True)
class Ray:
    """Half-line from ``origin`` along the unit vector ``direction``."""

    origin: Point
    direction: Point

    @classmethod
    def from_angle(cls, origin: Point, theta: float) -> Ray:
        return cls(origin, Point(math.cos(theta), math.sin(theta)))

    def line(self) -> Line:
        d = self.direction
        return Line.canonical(-d.y, d.x, d.y * self.origin.x - d.x * self.origin.y)

    def at(self, t: float) -> Point:
        return self.origin + self.direction * t

    def heading(self) -> float:
        return math.atan2(self.direction.y, self.direction.x)

    def param(self, p: Point) -> float:
        """Signed distance of the projection of ``p`` along the ray."""
        return (p - self.origin).dot(self.direction)


def line_through(p: Point, q: Point) -> Line:
    if distance(p, q) <= LENGTH_FLOOR:
        raise CoincidentPoints(f"{p} and {q} coincide")
    # order the inputs so (p, q) and (q, p) round identically
    if (q.x, q.y) < (p.x, p.y):
        p, q = q, p
    dx, dy = q.x - p.x, q.y - p.y
    return Line.canonical(-dy, dx, dy * p.x - dx * p.y)


def intersect(l1: Line, l2: Line, tol: ToleranceProfile = DEFAULT_TOL) -> Point:
    det = l1.a * l2.b - l2.a * l1.b
    if abs(det) < tol.det_tol:
        raise ParallelLines(f"lines {l1} and {l2} are parallel (det={det:.3g})")
    x = (l1.b * l2.c - l2.b * l1.c) / det
    y = (l2.a * l1.c - l1.a * l2.c) / det
    return Point(x, y)


def _unit(vertex: Point, p: Point) -> Point:
    d = p - vertex
    n = d.norm()
    if n <= LENGTH_FLOOR:
        raise CoincidentPoints(f"{p} coincides with vertex {vertex}")
    return d / n


def angle_at(vertex: Point, p: Point, q: Point) -> float:
    """Unsigned angle p-vertex-q in [0, pi]."""
    u = p - vertex
    v = q - vertex
    if u.norm() <= LENGTH_FLOOR or v.norm() <= LENGTH_FLOOR:
        raise CoincidentPoints("angle arm has zero length")
    return math.atan2(abs(u.cross(v)), u.dot(v))


def oriented_angle(vertex: Point, p: Point, q: Point) -> float:
    """Counterclockwise rotation in (-pi, pi] taking ray vertex->p onto vertex->q."""
    u = p - vertex
    v = q - vertex
    if u.norm() <= LENGTH_FLOOR or v.norm() <= LENGTH_FLOOR:
        raise CoincidentPoints("angle arm has zero length")
    return math.atan2(u.cross(v), u.dot(v))


def _wedge(vertex: Point, toward1: Point, toward2: Point) -> tuple[float, float, float]:
    u = _unit(vertex, toward1)
    v = _unit(vertex, toward2)
    total = math.atan2(abs(u.cross(v)), u.dot(v))
    sense = 1.0 if u.cross(v) >= 0.0 else -1.0
    return math.atan2(u.y, u.x), total, sense


def trisect_angle(vertex: Point, toward1: Point, toward2: Point) -> tuple[Ray, Ray]:
    """The two trisectors of the wedge; the first is adjacent to vertex->toward1."""
    start, total, sense = _wedge(vertex, toward1, toward2)
    if not 0.0 < total < math.pi:
        raise DegenerateAngle(f"cannot trisect an angle of {total!r} rad")
    third = sense * total / 3.0
    return (
        Ray.from_angle(vertex, start + third),
        Ray.from_angle(vertex, start + 2.0 * third),
    )


def bisect_angle(vertex: Point, toward1: Point, toward2: Point) -> Ray:
    start, total, sense = _wedge(vertex, toward1, toward2)
    if total >= math.pi:
        raise DegenerateAngle("straight angle has no unique interior bisector")
    return Ray.from_angle(vertex, start + sense * total / 2.0)


def perpendicular_bisector(p: Point, q: Point) -> Line:
    if distance(p, q) <= LENGTH_FLOOR:
        raise CoincidentPoints(f"{p} and {q} coincide")
    m = midpoint(p, q)
    dx, dy = q.x - p.x, q.y - p.y
    return Line.canonical(dx, dy, -(dx * m.x + dy * m.y))


def signed_area(a: Point, b: Point, c: Point) -> float:
    return 0.5 * ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x))


def circumcenter(a: Point, b: Point, c: Point) -> Point:
    # translate to a for accuracy
    bx, by = b.x - a.x, b.y - a.y
    cx, cy = c.x - a.x, c.y - a.y
    d = 2.0 * (bx * cy - by * cx)
    scale = max(bx * bx + by * by, cx * cx + cy * cy, (b.x - c.x) ** 2 + (b.y - c.y) ** 2)
    if scale == 0.0 or abs(d) <= 1e-14 * scale:
        raise CollinearPoints(f"{a}, {b}, {c} are collinear")
    b2 = bx * bx + by * by
    c2 = cx * cx + cy * cy
    ux = (cy * b2 - by * c2) / d
    uy = (bx * c2 - cx * b2) / d
    return Point(a.x + ux, a.y + uy)


@dataclass(frozen=True)
class Triangle:
    """Counterclockwise, non-degenerate triangle.

    Clockwise input is reoriented by swapping ``v2`` and ``v3``.
    """

    v1: Point
    v2: Point
    v3: Point
    floor: float = field(default=ANGLE_FLOOR, compare=False, repr=False)

    def __post_init__(self):
        if signed_area(self.v1, self.v2, self.v3) < 0.0:
            v2, v3 = self.v2, self.v3
            object.__setattr__(self, "v2", v3)
            object.__setattr__(self, "v3", v2)
        sides = self.sides()
        if min(sides) <= LENGTH_FLOOR or max(sides) / min(sides) > MAX_ASPECT:
            raise DegenerateTriangle(f"side lengths {sides} out of range")
        if signed_area(self.v1, self.v2, self.v3) <= 0.0 or min(self.angles()) <= self.floor:
            raise DegenerateTriangle(f"angles {self.angles()} below floor {self.floor}")

    @property
    def vertices(self) -> tuple[Point, Point, Point]:
        return (self.v1, self.v2, self.v3)

    def sides(self) -> tuple[float, float, float]:
        """Lengths opposite v1, v2, v3."""
        return (
            distance(self.v2, self.v3),
            distance(self.v3, self.v1),
            distance(self.v1, self.v2),
        )

    def angles(self) -> tuple[float, float, float]:
        return (
            angle_at(self.v1, self.v2, self.v3),
            angle_at(self.v2, self.v3, self.v1),
            angle_at(self.v3, self.v1, self.v2),
        )

    @property
    def diameter(self) -> float:
        return max(self.sides())

    def centroid(self) -> Point:
        return Point(
            (self.v1.x + self.v2.x + self.v3.x) / 3.0,
            (self.v1.y + self.v2.y + self.v3.y) / 3.0,
        )

    def area(self) -> float:
        return signed_area(self.v1, self.v2, self.v3)


def triangle_from_angles(
    alpha: float, beta: float, gamma: float, circumdiameter: float = 1.0
) -> Triangle:
    """Canonical pose: B at the origin, C on the +x axis, A above."""
    if abs(alpha + beta + gamma - math.pi) > 1e-9:
        raise DegenerateTriangle("angles must sum to pi")
    a = circumdiameter * math.sin(alpha)
    c = circumdiameter * math.sin(gamma)
    B = Point(0.0, 0.0)
    C = Point(a, 0.0)
    A = Point(c * math.cos(beta), c * math.sin(beta))
    return Triangle(A, B, C)


def equilateral_residual(t: Triangle) -> float:
    """(longest - shortest) / longest side."""
    s = t.sides()
    return (max(s) - min(s)) / max(s)


def barycentric_signs(p: Point, t: Triangle) -> tuple[float, float, float]:
    """Normalized (area-ratio) barycentric coordinates of ``p``."""
    total = t.area()
    return (
        signed_area(p, t.v2, t.v3) / total,
        signed_area(t.v1, p, t.v3) / total,
        signed_area(t.v1, t.v2, p) / total,
    )


def point_in_triangle(p: Point, t: Triangle, tol: ToleranceProfile = DEFAULT_TOL) -> bool:
    """Strict interior test; boundary points are outside."""
    return all(w > tol.det_tol for w in barycentric_signs(p, t))
