import math

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from morleykit import barycentric as bc
from morleykit.errors import NonEquilateralFrame, PointAtInfinity, ProportionalTriples
from morleykit.kernel import Point, Triangle, distance

EQ = bc.ReferenceFrame(Triangle(Point(0, 0), Point(1, 0), Point(0.5, math.sqrt(3) / 2)))
SCALENE = bc.ReferenceFrame(Triangle(Point(0, 0), Point(3, 0), Point(1, 2)))

entry = st.floats(-10, 10, allow_nan=False).filter(lambda v: abs(v) > 1e-3)
triples = st.builds(bc.point, entry, entry, entry)
positive = st.floats(0.1, 10)


def proportional(a, b, tol=1e-12):
    return a.proportional_to(b, tol)


def test_line_through_e_and_z():
    ln = bc.bary_line(bc.point(1, -2, 1), bc.point(0, 0, 1))
    assert ln.role == bc.LINE
    assert proportional(ln, bc.line(-2, -1, 0))


def test_line_through_x_and_y():
    assert bc.bary_line(bc.point(1, 0, 0), bc.point(0, 1, 0)) == bc.line(0, 0, 1)


def test_line_through_proportional_points():
    with pytest.raises(ProportionalTriples):
        bc.bary_line(bc.point(1, 2, 3), bc.point(2, 4, 6))


def test_role_is_checked():
    with pytest.raises(TypeError):
        bc.bary_intersect(bc.point(1, 0, 0), bc.point(0, 1, 0))


@pytest.mark.parametrize("pqr", [(2, 3, 5), (0.5, 1.5, 4.0), (1, 1, 1)])
def test_flank_vertices_match_closed_forms(pqr):
    p, q, r = pqr
    A, B, C = bc.flank_vertices(p, q, r)
    assert proportional(A, bc.point(-1, q, r))
    assert proportional(B, bc.point(p, -1, r))
    assert proportional(C, bc.point(p, q, -1))


def test_cevians_concur():
    assert bc.concurrent(*bc.cevians(2, 3, 5))


def test_sides_not_concurrent():
    X, Y, Z = bc.reference_vertices()
    sides = bc.bary_line(Y, Z), bc.bary_line(Z, X), bc.bary_line(X, Y)
    assert not bc.concurrent(*sides)


def test_parallels_concur_at_infinity():
    # l + t(1,1,1) all pass through the same point at infinity
    base = np.array([1.0, -2.0, 0.5])
    lines = [bc.line(*(base + t)) for t in (0.0, 1.0, 3.0)]
    assert bc.concurrent(*lines)


def test_perspector_examples():
    assert bc.perspector(1, 1, 1) == bc.point(1, 1, 1)
    assert distance(bc.bary_to_cartesian(EQ, bc.perspector(1, 1, 1)), EQ.t.centroid()) < 1e-15
    ax = bc.bary_line(bc.point(-1, 3, 5), bc.point(1, 0, 0))
    assert abs(bc.incidence(ax, bc.perspector(2, 3, 5))) < 1e-15


@given(positive, positive, positive)
def test_perspector_on_every_cevian(p, q, r):
    persp = bc.perspector(p, q, r)
    for ln in bc.cevians(p, q, r):
        assert abs(bc.incidence(ln, persp)) < 1e-12


def test_cevian_determinant_sweep():
    rng = np.random.default_rng(3)
    worst = 0.0
    for _ in range(10_000):
        p, q, r = rng.uniform(0.1, 10, 3)
        worst = max(worst, abs(bc.concurrency_det(*bc.cevians(p, q, r))))
    assert worst < 1e-14


@given(triples, triples, triples)
def test_duality(P, Q, R):
    assume(not proportional(P, Q, 1e-6) and not proportional(P, R, 1e-6))
    m = np.array([P.as_array(), Q.as_array(), R.as_array()])
    assume(abs(np.linalg.det(m)) > 1e-3 * np.prod(np.linalg.norm(m, axis=1)))
    back = bc.bary_intersect(bc.bary_line(P, Q), bc.bary_line(P, R))
    assert proportional(back, P, 1e-8)


@given(triples)
def test_canonical_idempotent(t):
    c = t.canonical()
    assert c.canonical() == c
    assert max(abs(v) for v in c) == 1.0


def test_bary_to_cartesian_examples():
    assert bc.bary_to_cartesian(SCALENE, bc.point(1, 0, 0)) == Point(0, 0)
    g = bc.bary_to_cartesian(SCALENE, bc.point(1, 1, 1))
    assert distance(g, SCALENE.t.centroid()) < 1e-15
    with pytest.raises(PointAtInfinity):
        bc.bary_to_cartesian(SCALENE, bc.point(1, 1, -2))


def test_cartesian_to_bary_examples():
    g = bc.cartesian_to_bary(SCALENE, SCALENE.t.centroid())
    assert tuple(g) == pytest.approx((1.0, 1.0, 1.0), abs=1e-15)
    v = bc.cartesian_to_bary(SCALENE, SCALENE.t.v2)
    assert (v.u, v.v, v.w) == (0.0, 1.0, 0.0)


@given(st.floats(0.01, 1), st.floats(0.01, 1), st.floats(0.01, 1))
def test_cartesian_round_trip(a, b, c):
    p = bc.bary_to_cartesian(SCALENE, bc.point(a, b, c))
    back = bc.bary_to_cartesian(SCALENE, bc.cartesian_to_bary(SCALENE, p))
    assert distance(p, back) < 1e-12


def test_perpendicular_bisector_form_examples():
    D = bc.bary_to_cartesian(EQ, bc.point(-0.5, 1, 1))
    assert bc.on_perpendicular_bisector_form(EQ, D, bc.Side.YZ) < 1e-15
    assert bc.on_perpendicular_bisector_form(EQ, EQ.t.v2, bc.Side.YZ) == pytest.approx(0.5, abs=1e-15)
    with pytest.raises(NonEquilateralFrame):
        bc.on_perpendicular_bisector_form(SCALENE, D, bc.Side.YZ)


@given(st.floats(-0.99, 0.99))
def test_perpendicular_bisector_form_family(t):
    for side, trip in ((bc.Side.YZ, (t, 1, 1)), (bc.Side.ZX, (1, t, 1)), (bc.Side.XY, (1, 1, t))):
        p = bc.bary_to_cartesian(EQ, bc.point(*trip))
        assert bc.on_perpendicular_bisector_form(EQ, p, side) < 1e-12
