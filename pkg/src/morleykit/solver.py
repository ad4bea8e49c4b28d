"""Fit converse configurations to a given triangle.

Every converse configuration has its six circumcenter angles equal to a
common value theta.  For a target triangle ABC and a target theta we solve
for the three apex angles so the outer triangle has ABC's shape, then pose
the result inside ABC by a similarity.  theta = 150 deg recovers the
classic trisector figure; theta = 180 deg is the configuration in which
BZ and CY meet at the circumcenter of AYZ (and cyclically).
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Optional

import numpy as np

from .constructions import (
    DEG,
    ConverseParameters,
    MorleyConfiguration,
    apex_angles,
    classic_morley,
    common_angle,
    converse_construct,
)
from .errors import GeometryError, InvalidParameters, InvalidRequest, SingularJacobian
from .kernel import ANGLE_FLOOR, Point, Triangle, midpoint, triangle_from_angles

THEOREM6_THETA = math.pi
MORLEY_THETA = 150.0 * DEG


@dataclass(frozen=True)
class SolveRequest:
    target_angles: tuple[float, float, float]
    theta: Optional[float] = None
    theorem6: bool = False
    max_iter: int = 200
    step_tol: float = 1e-12
    residual_tol: float = 1e-10
    theta_window: tuple[float, float] = (120.0 * DEG, 200.0 * DEG)
    # pose for the answer; defaults to the canonical triangle with these angles
    triangle: Optional[Triangle] = field(default=None, compare=False)

    def __post_init__(self):
        angles = tuple(float(a) for a in self.target_angles)
        object.__setattr__(self, "target_angles", angles)
        if len(angles) != 3 or min(angles) <= ANGLE_FLOOR:
            raise InvalidRequest(f"bad target angles {angles}")
        if abs(sum(angles) - math.pi) > 1e-9:
            raise InvalidRequest("target angles must sum to pi")
        if self.theorem6 == (self.theta is not None):
            raise InvalidRequest("give exactly one of theta or theorem6")
        lo, hi = self.theta_window
        if self.theta is not None and not lo < self.theta < hi:
            raise InvalidRequest(f"theta {self.theta!r} outside window ({lo}, {hi})")
        if self.max_iter < 1 or self.step_tol <= 0 or self.residual_tol <= 0:
            raise InvalidRequest("iteration limits must be positive")

    @property
    def target_theta(self) -> float:
        return THEOREM6_THETA if self.theorem6 else self.theta


@dataclass(frozen=True)
class SolveResult:
    params: ConverseParameters
    cfg: Optional[MorleyConfiguration]
    residual: float
    iterations: int
    converged: bool
    alignment_residual: float = 0.0


class NewtonResult(NamedTuple):
    x: np.ndarray
    iterations: int
    converged: bool
    residual: float


def _feasible_eval(f, x):
    try:
        fx = np.asarray(f(x), dtype=float)
    except GeometryError:
        return None
    if not np.all(np.isfinite(fx)):
        return None
    return fx


def damped_newton(
    f: Callable[[np.ndarray], np.ndarray],
    x0,
    residual_tol: float = 1e-10,
    step_tol: float = 1e-12,
    max_iter: int = 200,
    fd_step: float = 2.0**-23,
    max_halvings: int = 30,
    cond_limit: float = 1e12,
    callback: Optional[Callable[[np.ndarray, float], None]] = None,
) -> NewtonResult:
    """Newton's method with a forward-difference Jacobian and step halving.

    ``f`` may raise :class:`GeometryError` for infeasible points; those are
    rejected by the line search.  A Jacobian whose condition number exceeds
    ``cond_limit`` triggers a :class:`SingularJacobian` warning and a
    steepest-descent step instead.

    The default difference step is a power of two near 1e-7 so that
    ``x + h`` and the forward difference are exact for well-scaled ``x``.
    ``callback(x, residual_norm)`` sees the start and every accepted iterate.
    """
    x = np.array(x0, dtype=float)
    fx = _feasible_eval(f, x)
    if fx is None:
        raise InvalidParameters(f"starting point {x} is infeasible")
    norm = float(np.linalg.norm(fx))
    if callback is not None:
        callback(x.copy(), norm)
    n = x.size
    it = 0
    while it < max_iter and norm >= residual_tol:
        it += 1
        jac = np.empty((fx.size, n))
        for j in range(n):
            xh = x.copy()
            xh[j] += fd_step
            fh = _feasible_eval(f, xh)
            if fh is not None:
                jac[:, j] = (fh - fx) / fd_step
                continue
            xh[j] = x[j] - fd_step
            fh = _feasible_eval(f, xh)
            if fh is None:
                raise InvalidParameters(f"no feasible difference stencil at {x}")
            jac[:, j] = (fx - fh) / fd_step

        if np.linalg.cond(jac) > cond_limit:
            warnings.warn(f"ill-conditioned Jacobian at {x}", SingularJacobian, stacklevel=2)
            grad = jac.T @ fx
            jg = jac @ grad
            step = -grad * (grad @ grad) / (jg @ jg) if jg @ jg > 0 else -grad
        else:
            step = np.linalg.solve(jac, -fx)

        t = 1.0
        for _ in range(max_halvings + 1):
            xn = x + t * step
            fn = _feasible_eval(f, xn)
            if fn is not None and np.linalg.norm(fn) < norm:
                break
            t *= 0.5
        else:
            break  # line search stalled; report the best iterate
        x, fx = xn, fn
        norm = float(np.linalg.norm(fx))
        if callback is not None:
            callback(x.copy(), norm)
        if np.linalg.norm(t * step) < step_tol:
            break
    return NewtonResult(x, it, norm < residual_tol, norm)


def _signed_apex_offsets(cfg: MorleyConfiguration) -> float:
    """Sum of (D - P), (E - Q), (F - R) along each outward side normal."""
    total = 0.0
    for apex, centre, p, q, opposite in (
        (cfg.D, cfg.P, cfg.Y, cfg.Z, cfg.X),
        (cfg.E, cfg.Q, cfg.Z, cfg.X, cfg.Y),
        (cfg.F, cfg.R, cfg.X, cfg.Y, cfg.Z),
    ):
        normal = midpoint(p, q) - opposite
        total += (apex - centre).dot(normal) / normal.norm()
    return total / cfg.diameter


def residual_vector(params: ConverseParameters, req: SolveRequest,
                    theta: Optional[float] = None) -> np.ndarray:
    """(angle A - alpha, angle B - beta, shape-of-family residual).

    The last entry is ``common_angle - theta`` in theta mode.  In theorem6
    mode it is the summed signed offset of D, E, F from P, Q, R divided by
    the diameter, which vanishes exactly when the three incidences hold.
    ``theta`` overrides the request's target, for continuation steps.
    """
    cfg = converse_construct(params)
    alpha, beta, _ = req.target_angles
    got = cfg.outer().angles()
    if theta is None and req.theorem6:
        last = _signed_apex_offsets(cfg)
    else:
        last = common_angle(cfg) - (req.target_theta if theta is None else theta)
    return np.array([got[0] - alpha, got[1] - beta, last])


def _similarity(src: tuple[Point, Point], dst: tuple[Point, Point]):
    """Orientation-preserving similarity taking src[0], src[1] onto dst[0], dst[1]."""
    s0, s1 = complex(*src[0].as_tuple()), complex(*src[1].as_tuple())
    d0, d1 = complex(*dst[0].as_tuple()), complex(*dst[1].as_tuple())
    a = (d1 - d0) / (s1 - s0)
    b = d0 - a * s0

    def apply(p: Point) -> Point:
        z = a * complex(p.x, p.y) + b
        return Point(z.real, z.imag)

    return apply


def pose_into(cfg: MorleyConfiguration, target: Triangle) -> tuple[MorleyConfiguration, float]:
    """Map ``cfg`` so its A, B land on the target's; report where C lands."""
    m = _similarity((cfg.A, cfg.B), (target.v1, target.v2))
    moved = MorleyConfiguration(*(m(getattr(cfg, k)) for k in "ABCXYZDEF"))
    err = math.hypot(moved.C.x - target.v3.x, moved.C.y - target.v3.y) / target.diameter
    # pin A, B, C to the caller's triangle exactly
    moved = MorleyConfiguration(target.v1, target.v2, target.v3,
                                *(getattr(moved, k) for k in "XYZDEF"))
    return moved, err


def _theta_path(req: SolveRequest) -> list[Optional[float]]:
    """Intermediate thetas walked from the classic figure; None is the final target."""
    if req.theorem6:
        steps = 6
    else:
        steps = max(1, math.ceil(abs(req.theta - MORLEY_THETA) / (5.0 * DEG)))
    start, end = MORLEY_THETA, req.target_theta
    return [start + (end - start) * k / steps for k in range(1, steps)] + [None]


def solve(req: SolveRequest) -> SolveResult:
    """Continuation from the classic trisector figure to the requested member."""
    target = req.triangle or triangle_from_angles(*req.target_angles)
    if req.triangle is not None:
        got = target.angles()
        if max(abs(g - a) for g, a in zip(got, req.target_angles)) > 1e-9:
            raise InvalidRequest("triangle does not match target_angles")
    start = apex_angles(classic_morley(target))
    x = np.array([start.d, start.e, start.f])

    iterations = 0
    path = _theta_path(req)
    for k, theta in enumerate(path):
        def f(v, theta=theta):
            return residual_vector(ConverseParameters(*v), req, theta)

        res = damped_newton(f, x, req.residual_tol, req.step_tol,
                            max(1, req.max_iter - iterations))
        iterations += res.iterations
        x = res.x
        if not res.converged:
            break
    # converged only if the last (target) step converged
    converged = bool(res.converged) and k == len(path) - 1

    params = ConverseParameters(*(float(v) for v in x))
    cfg, align = pose_into(converse_construct(params), target)
    return SolveResult(params, cfg, res.residual, iterations, converged, align)
