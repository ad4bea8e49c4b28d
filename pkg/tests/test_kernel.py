import math

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from morleykit.errors import (
    CoincidentPoints,
    CollinearPoints,
    DegenerateAngle,
    DegenerateTriangle,
    ParallelLines,
)
from morleykit.kernel import (
    Line,
    Point,
    ToleranceProfile,
    Triangle,
    angle_at,
    bisect_angle,
    circumcenter,
    distance,
    equilateral_residual,
    intersect,
    line_through,
    midpoint,
    perpendicular_bisector,
    point_in_triangle,
    signed_area,
    trisect_angle,
)

O = Point(0.0, 0.0)
coord = st.floats(-100, 100, allow_nan=False, allow_infinity=False)
points = st.builds(Point, coord, coord)


def heading(ray):
    return math.degrees(ray.heading())


# line_through

def test_line_through_axes():
    assert line_through(O, Point(1, 0)) == Line(0.0, 1.0, 0.0)
    assert line_through(O, Point(0, 1)) == Line(1.0, 0.0, 0.0)


def test_line_through_diagonal():
    ln = line_through(O, Point(1, 1))
    r = 1 / math.sqrt(2)
    assert ln.a == pytest.approx(r, abs=1e-15)
    assert ln.b == pytest.approx(-r, abs=1e-15)
    assert ln.c == 0.0
    for p in (O, Point(1, 1)):
        assert abs(ln.residual(p)) < 1e-15


def test_line_through_coincident():
    with pytest.raises(CoincidentPoints):
        line_through(Point(1, 2), Point(1, 2))


@given(points, points)
def test_line_canonical_is_order_independent(p, q):
    assume(distance(p, q) > 1e-6)
    assert line_through(p, q) == line_through(q, p)
    ln = line_through(p, q)
    assert math.hypot(ln.a, ln.b) == pytest.approx(1.0, abs=1e-15)
    assert ln.a > 0 or (ln.a == 0 and ln.b > 0)


# intersect

def test_intersect_axes():
    assert intersect(Line(1, 0, 0), Line(0, 1, 0)) == Point(0.0, 0.0)


def test_intersect_parallel():
    with pytest.raises(ParallelLines):
        intersect(Line(0, 1, 0), Line(0, 1, -1))


def test_intersect_hand_solved():
    p = intersect(line_through(O, Point(1, 1)), line_through(Point(2, 0), Point(0, 2)))
    assert p.x == pytest.approx(1.0, abs=1e-15)
    assert p.y == pytest.approx(1.0, abs=1e-15)


# angles

def test_angle_at_examples():
    assert angle_at(O, Point(1, 0), Point(0, 1)) == pytest.approx(math.pi / 2, abs=1e-15)
    assert angle_at(O, Point(1, 0), Point(1, 0)) == 0.0
    assert angle_at(O, Point(1, 0), Point(math.cos(1), math.sin(1))) == pytest.approx(1.0, abs=1e-15)


def test_angle_at_coincident():
    with pytest.raises(CoincidentPoints):
        angle_at(O, O, Point(1, 0))


@given(points, points, points)
def test_angle_at_symmetric_and_bounded(v, p, q):
    assume(distance(v, p) > 1e-6 and distance(v, q) > 1e-6)
    a = angle_at(v, p, q)
    assert 0.0 <= a <= math.pi
    assert a == angle_at(v, q, p)


@given(st.floats(0.01, 3.0), st.floats(0.01, 0.99), st.floats(-math.pi, math.pi))
def test_angle_additivity(total, frac, start):
    v = Point(0.3, -0.2)
    p = v + Point(math.cos(start), math.sin(start))
    q = v + Point(math.cos(start + frac * total), math.sin(start + frac * total))
    r = v + Point(math.cos(start + total), math.sin(start + total))
    assert angle_at(v, p, q) + angle_at(v, q, r) == pytest.approx(angle_at(v, p, r), abs=1e-9)


# trisection / bisection

def test_trisect_right_angle():
    r1, r2 = trisect_angle(O, Point(1, 0), Point(0, 1))
    assert heading(r1) == pytest.approx(30.0, abs=1e-12)
    assert heading(r2) == pytest.approx(60.0, abs=1e-12)


def test_trisect_sixty():
    r1, r2 = trisect_angle(O, Point(1, 0), Point(math.cos(math.pi / 3), math.sin(math.pi / 3)))
    assert heading(r1) == pytest.approx(20.0, abs=1e-12)
    assert heading(r2) == pytest.approx(40.0, abs=1e-12)


def test_trisect_first_ray_adjacent_to_first_argument():
    r1, r2 = trisect_angle(O, Point(0, 1), Point(1, 0))
    assert heading(r1) == pytest.approx(60.0, abs=1e-12)
    assert heading(r2) == pytest.approx(30.0, abs=1e-12)


@pytest.mark.parametrize("q", [Point(1, 0), Point(-1, 0)])
def test_trisect_degenerate(q):
    with pytest.raises(DegenerateAngle):
        trisect_angle(O, Point(1, 0), q)


def test_trisect_sweep_equal_parts():
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(100_000):
        start = rng.uniform(-math.pi, math.pi)
        total = rng.uniform(0.01, math.pi - 0.01)
        v = Point(*rng.uniform(-5, 5, 2))
        p = v + Point(math.cos(start), math.sin(start))
        q = v + Point(math.cos(start + total), math.sin(start + total))
        r1, r2 = trisect_angle(v, p, q)
        t1, t2 = v + r1.direction, v + r2.direction
        measured = angle_at(v, p, q) / 3.0
        worst = max(worst, abs(angle_at(v, p, t1) - measured),
                    abs(angle_at(v, t1, t2) - measured), abs(angle_at(v, t2, q) - measured))
    assert worst < 1e-9


def test_bisect_examples():
    assert heading(bisect_angle(O, Point(1, 0), Point(0, 1))) == pytest.approx(45.0, abs=1e-12)
    assert heading(bisect_angle(O, Point(1, 1), Point(2, 2))) == pytest.approx(45.0, abs=1e-12)


@given(st.floats(0.01, 3.1), st.floats(-math.pi, math.pi))
def test_bisect_halves(total, start):
    p = Point(math.cos(start), math.sin(start))
    q = Point(math.cos(start + total), math.sin(start + total))
    m = bisect_angle(O, p, q).direction
    assert abs(angle_at(O, p, m) - angle_at(O, m, q)) < 1e-12


# perpendicular bisector / circumcenter

def test_perpendicular_bisector_examples():
    assert perpendicular_bisector(O, Point(2, 0)) == Line(1.0, 0.0, -1.0)
    assert perpendicular_bisector(O, Point(0, 2)) == Line(0.0, 1.0, -1.0)
    ln = perpendicular_bisector(O, Point(1, 1))
    assert abs(ln.residual(Point(0.5, 0.5))) < 1e-15
    off = Point(0.5, 0.5) + ln.direction * 3.0
    assert distance(off, O) == pytest.approx(distance(off, Point(1, 1)), rel=1e-15)
    d = ln.direction
    assert abs(d.x + d.y) < 1e-15  # parallel to (-1, 1)


@given(points, points)
def test_perpendicular_bisector_meets_line_at_midpoint(p, q):
    assume(distance(p, q) > 1e-3)
    m = intersect(perpendicular_bisector(p, q), line_through(p, q))
    assert distance(m, midpoint(p, q)) <= 1e-9 * max(1.0, distance(p, q))


def test_circumcenter_examples():
    assert circumcenter(O, Point(1, 0), Point(0, 1)) == Point(0.5, 0.5)
    pts = [Point(math.cos(t), math.sin(t)) for t in (0.3, 0.3 + 2 * math.pi / 3, 0.3 + 4 * math.pi / 3)]
    c = circumcenter(*pts)
    assert abs(c.x) < 1e-15 and abs(c.y) < 1e-15


def test_circumcenter_collinear():
    with pytest.raises(CollinearPoints):
        circumcenter(O, Point(1, 1), Point(2, 2))


@given(points, points, points)
def test_circumcenter_equidistant_and_on_bisectors(a, b, c):
    scale = max(distance(a, b), distance(b, c), distance(c, a))
    assume(scale > 1e-2 and abs(signed_area(a, b, c)) > 1e-2 * scale * scale)
    o = circumcenter(a, b, c)
    ra, rb, rc = distance(o, a), distance(o, b), distance(o, c)
    assert max(ra, rb, rc) - min(ra, rb, rc) <= 1e-12 * max(ra, scale) * 1e2
    for p, q in ((a, b), (b, c), (c, a)):
        assert abs(perpendicular_bisector(p, q).residual(o)) <= 1e-9 * max(ra, scale)


# triangles and predicates

def test_equilateral_residual_examples():
    eq = Triangle(O, Point(1, 0), Point(0.5, math.sqrt(3) / 2))
    assert equilateral_residual(eq) < 1e-15
    right = Triangle(O, Point(1, 0), Point(0, 1))
    assert equilateral_residual(right) == pytest.approx((math.sqrt(2) - 1) / math.sqrt(2), abs=1e-15)


def test_point_in_triangle():
    t = Triangle(O, Point(1, 0), Point(0, 1))
    assert point_in_triangle(t.centroid(), t)
    assert not point_in_triangle(Point(1, 0), t)
    assert not point_in_triangle(Point(0.5, 0.0), t)
    assert not point_in_triangle(Point(2, 2), t)


def test_signed_area():
    assert signed_area(O, Point(1, 0), Point(0, 1)) == 0.5
    assert signed_area(O, Point(0, 1), Point(1, 0)) == -0.5
    assert signed_area(O, Point(1, 1), Point(2, 2)) == 0.0


def test_triangle_reorients_clockwise_input():
    t = Triangle(O, Point(0, 1), Point(1, 0))
    assert t.area() > 0
    assert t.v2 == Point(1, 0)


@pytest.mark.parametrize("pts", [
    (O, Point(1, 0), Point(2, 0)),
    (O, Point(1, 0), Point(0.5, 1e-9)),
    (O, O, Point(0, 1)),
])
def test_triangle_rejects_degenerate(pts):
    with pytest.raises(DegenerateTriangle):
        Triangle(*pts)


def test_tolerance_profile_must_be_positive():
    with pytest.raises(ValueError):
        ToleranceProfile(angle_tol=0.0)


def test_point_must_be_finite():
    with pytest.raises(ValueError):
        Point(float("nan"), 0.0)
