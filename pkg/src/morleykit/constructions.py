"""Labeled Morley-type configurations and the checks run on them.

Labels follow one fixed scheme throughout:

* ``A, B, C``: the outer triangle, counterclockwise.
* ``X, Y, Z``: the inner triangle; X faces side BC, Y faces CA, Z faces AB.
* ``D = BZ.CY``, ``E = CX.AZ``, ``F = AY.BX``: apexes of the isosceles
  triangles erected on YZ, ZX, XY.
* ``P, Q, R``: circumcenters of AYZ, BZX, CXY.

Two different angle triples show up and should not be confused:

* vertex splits ``(YAZ, ZBX, XCY)``, which are the middle parts of the
  angles of ABC (a third of each angle for classic Morley);
* inclinations ``(XYC, YZA, ZXB)``, which are the angles the sides of XYZ
  make with the flank lines (``30 deg + apex/2`` for converse configurations).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    CircumcenterOutside,
    GeometryError,
    InconsistentConfiguration,
    InvalidParameters,
    ParallelLines,
    WrongSide,
)
from .kernel import (
    DEFAULT_TOL,
    Point,
    ToleranceProfile,
    Triangle,
    angle_at,
    bisect_angle,
    circumcenter,
    distance,
    intersect,
    line_through,
    midpoint,
    oriented_angle,
    point_in_triangle,
    trisect_angle,
)

LABELS = ("A", "B", "C", "X", "Y", "Z", "D", "E", "F", "P", "Q", "R")
DEG = math.pi / 180.0
TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class MorleyConfiguration:
    A: Point
    B: Point
    C: Point
    X: Point
    Y: Point
    Z: Point
    D: Point
    E: Point
    F: Point

    @classmethod
    def from_points(cls, A, B, C, X, Y, Z, tol: ToleranceProfile = DEFAULT_TOL):
        """Derive D, E, F as intersections of the lines through the given points."""
        D = intersect(line_through(B, Z), line_through(C, Y), tol)
        E = intersect(line_through(C, X), line_through(A, Z), tol)
        F = intersect(line_through(A, Y), line_through(B, X), tol)
        return cls(A, B, C, X, Y, Z, D, E, F)

    @cached_property
    def P(self) -> Point:
        return circumcenter(self.A, self.Y, self.Z)

    @cached_property
    def Q(self) -> Point:
        return circumcenter(self.B, self.Z, self.X)

    @cached_property
    def R(self) -> Point:
        return circumcenter(self.C, self.X, self.Y)

    def points(self) -> dict[str, Point]:
        return {label: getattr(self, label) for label in LABELS}

    def outer(self) -> Triangle:
        return Triangle(self.A, self.B, self.C)

    def inner(self) -> Triangle:
        return Triangle(self.X, self.Y, self.Z)

    @property
    def diameter(self) -> float:
        return max(distance(self.A, self.B), distance(self.B, self.C), distance(self.C, self.A))

    def invariant_residuals(self) -> dict[str, float]:
        """Relative deviations from the defining incidences."""
        scale = self.diameter
        alt = MorleyConfiguration.from_points(self.A, self.B, self.C, self.X, self.Y, self.Z)
        out = {}
        for label in "DEF":
            out[label] = distance(getattr(self, label), getattr(alt, label)) / scale
        for label, (u, v, w) in zip("PQR", (("A", "Y", "Z"), ("B", "Z", "X"), ("C", "X", "Y"))):
            o = getattr(self, label)
            radii = [distance(o, getattr(self, k)) for k in (u, v, w)]
            out[label] = (max(radii) - min(radii)) / scale
        return out


@dataclass(frozen=True)
class ConverseParameters:
    """Apex angles (radians) of the isosceles triangles on YZ, ZX, XY."""

    d: float
    e: float
    f: float
    s: float = 1.0

    @classmethod
    def from_degrees(cls, d, e, f, s=1.0):
        return cls(d * DEG, e * DEG, f * DEG, s)

    @classmethod
    def from_base_angles(cls, bd, be, bf, s=1.0):
        return cls(math.pi - 2 * bd, math.pi - 2 * be, math.pi - 2 * bf, s)

    def base_angles(self) -> tuple[float, float, float]:
        return tuple((math.pi - a) / 2.0 for a in (self.d, self.e, self.f))

    def vertex_splits(self) -> tuple[float, float, float]:
        """Predicted YAZ, ZBX, XCY: 120 deg minus half the two far apexes."""
        third = 2.0 * math.pi / 3.0
        return (
            third - (self.e + self.f) / 2.0,
            third - (self.f + self.d) / 2.0,
            third - (self.d + self.e) / 2.0,
        )

    def inclinations(self) -> tuple[float, float, float]:
        """Predicted XYC, YZA, ZXB: 30 deg plus half the apex."""
        return tuple(math.pi / 6.0 + a / 2.0 for a in (self.d, self.e, self.f))


@dataclass(frozen=True)
class HypothesisResiduals:
    angle_identity: tuple[float, float, float]
    bisector: tuple[float, float, float]
    interiority: tuple[bool, bool, bool, bool, bool, bool]

    def max(self) -> float:
        return max(self.angle_identity + self.bisector)


def classic_morley(t: Triangle, tol: ToleranceProfile = DEFAULT_TOL) -> MorleyConfiguration:
    """Intersections of adjacent trisectors of the angles of ``t``."""
    A, B, C = t.vertices
    # first ray of each pair is adjacent to the first "toward" point
    b_c, b_a = trisect_angle(B, C, A)
    c_b, c_a = trisect_angle(C, B, A)
    a_b, a_c = trisect_angle(A, B, C)
    X = intersect(b_c.line(), c_b.line(), tol)
    Y = intersect(c_a.line(), a_c.line(), tol)
    Z = intersect(a_b.line(), b_a.line(), tol)
    D = intersect(b_a.line(), c_a.line(), tol)
    E = intersect(c_b.line(), a_b.line(), tol)
    F = intersect(a_c.line(), b_c.line(), tol)
    return MorleyConfiguration(A, B, C, X, Y, Z, D, E, F)


def _side(p: Point, q: Point, r: Point) -> float:
    """Which side of line pq the point r is on (sign of the cross product)."""
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


def converse_construct(params: ConverseParameters,
                       tol: ToleranceProfile = DEFAULT_TOL) -> MorleyConfiguration:
    """Erect isosceles triangles outward on a unit-pose equilateral XYZ.

    X sits at the origin, Y on the +x axis, Z above.  A, B, C are the
    meets of the flank lines and must land on the same side of each XYZ
    side as the apex erected on it, with X, Y, Z strictly inside ABC.
    """
    d, e, f, s = params.d, params.e, params.f, params.s
    if not s > 0 or not all(0.0 < a < math.pi for a in (d, e, f)):
        raise InvalidParameters(f"apex angles must lie in (0, pi): {params}")
    if not all(v > 0.0 for v in params.vertex_splits()):
        raise InvalidParameters(f"nonpositive vertex split for {params}")

    X = Point(0.0, 0.0)
    Y = Point(s, 0.0)
    Z = Point(0.5 * s, 0.5 * math.sqrt(3.0) * s)
    centre = Point(0.5 * s, s / (2.0 * math.sqrt(3.0)))

    def apex(p, q, angle):
        m = midpoint(p, q)
        out = m - centre
        return m + out * ((0.5 * s / math.tan(0.5 * angle)) / out.norm())

    D, E, F = apex(Y, Z, d), apex(Z, X, e), apex(X, Y, f)
    try:
        A = intersect(line_through(E, Z), line_through(F, Y), tol)
        B = intersect(line_through(F, X), line_through(D, Z), tol)
        C = intersect(line_through(D, Y), line_through(E, X), tol)
    except ParallelLines as exc:
        raise InvalidParameters(f"flank lines do not meet for {params}") from exc

    for (p, q, apx, vtx, name) in ((Y, Z, D, A, "A"), (Z, X, E, B, "B"), (X, Y, F, C, "C")):
        if _side(p, q, apx) * _side(p, q, vtx) <= 0.0:
            raise WrongSide(f"{name} is not on the same side as its apex for {params}")
    try:
        outer = Triangle(A, B, C)
    except GeometryError as exc:
        raise InvalidParameters(f"degenerate outer triangle for {params}") from exc
    if not all(point_in_triangle(p, outer, tol) for p in (X, Y, Z)):
        raise WrongSide(f"XYZ not inside ABC for {params}")
    return MorleyConfiguration(A, B, C, X, Y, Z, D, E, F)


def converse_validity(params: ConverseParameters, tol: ToleranceProfile = DEFAULT_TOL) -> bool:
    try:
        converse_construct(params, tol)
    except (InvalidParameters, ValueError):
        return False
    return True


def apex_angles(cfg: MorleyConfiguration) -> ConverseParameters:
    """Measure YDZ, ZEX, XFY and the mean side of XYZ."""
    s = (distance(cfg.X, cfg.Y) + distance(cfg.Y, cfg.Z) + distance(cfg.Z, cfg.X)) / 3.0
    return ConverseParameters(
        angle_at(cfg.D, cfg.Y, cfg.Z),
        angle_at(cfg.E, cfg.Z, cfg.X),
        angle_at(cfg.F, cfg.X, cfg.Y),
        s,
    )


def vertex_splits(cfg: MorleyConfiguration) -> tuple[float, float, float]:
    """YAZ, ZBX, XCY."""
    return (
        angle_at(cfg.A, cfg.Y, cfg.Z),
        angle_at(cfg.B, cfg.Z, cfg.X),
        angle_at(cfg.C, cfg.X, cfg.Y),
    )


def _bisector_deviation(apex: Point, p: Point, q: Point, inner: Point) -> float:
    ray = bisect_angle(apex, p, q)
    return angle_at(apex, apex + ray.direction, inner)


def hypothesis_residuals(cfg: MorleyConfiguration,
                         tol: ToleranceProfile = DEFAULT_TOL) -> HypothesisResiduals:
    """How far ``cfg`` is from satisfying the generalized-theorem hypotheses.

    Angle identities compare unsigned angles: BXC against 120 deg + YAZ and
    cyclically.  Bisector residuals are the angle between DX and the
    bisector of BDC (and cyclically).
    """
    A, B, C, X, Y, Z, D, E, F = (cfg.A, cfg.B, cfg.C, cfg.X, cfg.Y, cfg.Z,
                                 cfg.D, cfg.E, cfg.F)
    third = 2.0 * math.pi / 3.0
    ya, zb, xc = vertex_splits(cfg)
    identity = (
        abs(angle_at(X, B, C) - third - ya),
        abs(angle_at(Y, C, A) - third - zb),
        abs(angle_at(Z, A, B) - third - xc),
    )
    bisector = (
        _bisector_deviation(D, B, C, X),
        _bisector_deviation(E, C, A, Y),
        _bisector_deviation(F, A, B, Z),
    )
    outer = cfg.outer()
    inside = tuple(point_in_triangle(p, outer, tol) for p in (X, Y, Z, D, E, F))
    return HypothesisResiduals(identity, bisector, inside)


def inclination_angles(cfg: MorleyConfiguration,
                       tol: ToleranceProfile = DEFAULT_TOL) -> tuple[float, float, float]:
    """(XYC, YZA, ZXB), each cross-checked against its twin (BZX, CXY, AYZ)."""
    pairs = (
        (angle_at(cfg.Y, cfg.X, cfg.C), angle_at(cfg.Z, cfg.B, cfg.X)),
        (angle_at(cfg.Z, cfg.Y, cfg.A), angle_at(cfg.X, cfg.C, cfg.Y)),
        (angle_at(cfg.X, cfg.Z, cfg.B), angle_at(cfg.Y, cfg.A, cfg.Z)),
    )
    for name, (m1, m2) in zip("xyz", pairs):
        if abs(m1 - m2) > 10.0 * tol.angle_tol:
            raise InconsistentConfiguration(
                f"inclination {name} measured as {m1!r} and {m2!r}"
            )
    return tuple(m1 for m1, _ in pairs)


def _circumcenters_inside(cfg: MorleyConfiguration, tol: ToleranceProfile) -> bool:
    checks = (
        (cfg.P, (cfg.A, cfg.Y, cfg.Z)),
        (cfg.Q, (cfg.B, cfg.Z, cfg.X)),
        (cfg.R, (cfg.C, cfg.X, cfg.Y)),
    )
    return all(point_in_triangle(o, Triangle(*tri), tol) for o, tri in checks)


def six_angles(cfg: MorleyConfiguration, check_interior: bool = True,
               tol: ToleranceProfile = DEFAULT_TOL) -> tuple[float, ...]:
    """BXR, CXQ, CYP, AYR, AZQ, BZP in [0, 2*pi).

    Each angle is measured with the rotation sense that makes it equal the
    unsigned angle while it is below pi, and continues past pi instead of
    folding back.  With ``check_interior`` the circumcenters P, Q, R must lie
    inside AYZ, BZX, CXY.
    """
    if check_interior and not _circumcenters_inside(cfg, tol):
        raise CircumcenterOutside("a circumcenter lies outside its triangle")
    A, B, C, X, Y, Z, P, Q, R = (cfg.A, cfg.B, cfg.C, cfg.X, cfg.Y, cfg.Z,
                                 cfg.P, cfg.Q, cfg.R)
    return (
        oriented_angle(X, B, R) % TWO_PI,
        oriented_angle(X, Q, C) % TWO_PI,
        oriented_angle(Y, C, P) % TWO_PI,
        oriented_angle(Y, R, A) % TWO_PI,
        oriented_angle(Z, A, Q) % TWO_PI,
        oriented_angle(Z, P, B) % TWO_PI,
    )


def common_angle(cfg: MorleyConfiguration) -> float:
    """Mean of the six angles, measured without the interiority check."""
    return math.fsum(six_angles(cfg, check_interior=False)) / 6.0


def six_angle_prediction(cfg: MorleyConfiguration,
                         tol: ToleranceProfile = DEFAULT_TOL) -> tuple[float, float, float]:
    """450 deg - x - y - z - (interior angle of XYZ) at X, Y and Z."""
    x, y, z = inclination_angles(cfg, tol)
    base = 2.5 * math.pi - x - y - z
    inner = (
        angle_at(cfg.X, cfg.Y, cfg.Z),
        angle_at(cfg.Y, cfg.Z, cfg.X),
        angle_at(cfg.Z, cfg.X, cfg.Y),
    )
    return tuple(base - a for a in inner)


def _wrap(a: float) -> float:
    return (a + math.pi) % TWO_PI - math.pi


def circumcenter_half_angle_check(cfg: MorleyConfiguration,
                                  tol: ToleranceProfile = DEFAULT_TOL) -> tuple[float, ...]:
    """Residuals of CXR = BXQ = 90 deg - x and the cyclic counterparts.

    The angles are signed: positive when the circumcenter lies on the far
    side of the chord from the other flank.  That sign flips exactly when
    the inclination passes 90 deg, so the identity holds without
    case-splitting on obtuse inner triangles.
    """
    A, B, C, X, Y, Z, P, Q, R = (cfg.A, cfg.B, cfg.C, cfg.X, cfg.Y, cfg.Z,
                                 cfg.P, cfg.Q, cfg.R)
    x, y, z = inclination_angles(cfg, tol)
    right = math.pi / 2.0
    measured = (
        (oriented_angle(X, C, R), x),
        (oriented_angle(X, Q, B), x),
        (oriented_angle(Y, A, P), y),
        (oriented_angle(Y, R, C), y),
        (oriented_angle(Z, B, Q), z),
        (oriented_angle(Z, P, A), z),
    )
    return tuple(abs(_wrap(m - (right - incl))) for m, incl in measured)


def split_identity_residuals(cfg: MorleyConfiguration) -> tuple[float, float, float]:
    """|BXC - 120 deg - ZAY| and cyclic."""
    third = 2.0 * math.pi / 3.0
    return (
        abs(angle_at(cfg.X, cfg.B, cfg.C) - third - angle_at(cfg.A, cfg.Z, cfg.Y)),
        abs(angle_at(cfg.Y, cfg.C, cfg.A) - third - angle_at(cfg.B, cfg.X, cfg.Z)),
        abs(angle_at(cfg.Z, cfg.A, cfg.B) - third - angle_at(cfg.C, cfg.Y, cfg.X)),
    )


def circumcenter_incidence(cfg: MorleyConfiguration) -> float:
    """max(|D-P|, |E-Q|, |F-R|) relative to the diameter of ABC."""
    return max(distance(cfg.D, cfg.P), distance(cfg.E, cfg.Q),
               distance(cfg.F, cfg.R)) / cfg.diameter


def dumps(cfg: MorleyConfiguration) -> str:
    """One ``LABEL x y`` line per point, coordinates as hexadecimal floats."""
    return "".join(f"{k} {p.x.hex()} {p.y.hex()}\n" for k, p in cfg.points().items())


def loads(text: str) -> MorleyConfiguration:
    """Inverse of :func:`dumps`; P, Q, R are recomputed rather than trusted."""
    pts = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        raw = raw.strip()
        if not raw or raw.startswith("#"):
            continue
        parts = raw.split()
        if len(parts) != 3 or parts[0] not in LABELS:
            raise ValueError(f"line {lineno}: expected 'LABEL x y', got {raw!r}")
        if parts[0] in pts:
            raise ValueError(f"line {lineno}: duplicate label {parts[0]}")
        pts[parts[0]] = Point(float.fromhex(parts[1]), float.fromhex(parts[2]))
    missing = [k for k in LABELS[:9] if k not in pts]
    if missing:
        raise ValueError(f"missing labels: {' '.join(missing)}")
    return MorleyConfiguration(*(pts[k] for k in LABELS[:9]))
