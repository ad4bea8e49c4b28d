"""Seeded randomized sweeps that check each theorem and summarize residuals.

Every trial draws from its own generator, derived from ``(seed, index)``
with :class:`numpy.random.SeedSequence` (spawn key = the trial index) feeding
a PCG64 bit generator.  Both are integer-only and specified independently of
platform, so a report depends on nothing but its plan.
"""
from __future__ import annotations

import enum
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import barycentric as bc
from .constructions import (
    DEG,
    ConverseParameters,
    MorleyConfiguration,
    classic_morley,
    converse_construct,
    dumps,
    hypothesis_residuals,
    six_angles,
    split_identity_residuals,
)
from .errors import GeometryError
from .kernel import (
    ANGLE_FLOOR,
    DEFAULT_TOL,
    Point,
    ToleranceProfile,
    Triangle,
    circumcenter,
    distance,
    equilateral_residual,
    line_through,
    point_in_triangle,
    triangle_from_angles,
)

REPORT_HEADER = "morleykit verification report v1"
MAX_RESAMPLES = 1000
# solver incidence / equilaterality threshold, relative to the diameter
T6_TOL = 1e-8


class Theorem(enum.Enum):
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    T4 = "T4"
    T5_150 = "T5_150"
    T6 = "T6"

    @classmethod
    def parse(cls, name: str) -> Theorem:
        key = name.upper()
        if key == "T5":
            key = "T5_150"
        return cls(key)


@dataclass(frozen=True)
class TrialPlan:
    theorem: Theorem
    trials: int
    seed: int
    min_angle: float = 5.0 * DEG
    tol: ToleranceProfile = DEFAULT_TOL

    def __post_init__(self):
        if isinstance(self.theorem, str):
            object.__setattr__(self, "theorem", Theorem.parse(self.theorem))
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if not ANGLE_FLOOR < self.min_angle < math.pi / 3:
            raise ValueError("min_angle must lie in (floor, 60 deg)")


@dataclass(frozen=True)
class TrialOutcome:
    residual: float
    passed: bool
    not_converged: bool
    resampled: int
    inputs: str
    cfg_text: str = ""


@dataclass
class VerificationReport:
    theorem: Theorem
    trials: int
    seed: int
    min_angle: float
    pass_count: int
    not_converged: int
    resampled: int
    max_residual: float
    p99_residual: float
    worst_case_input: str
    wall_time: float = field(default=0.0, compare=False)
    outcomes: list = field(default_factory=list, compare=False, repr=False)

    def to_text(self) -> str:
        """Header plus one ``key value`` line per aggregate.

        Wall time is deliberately left out so reports are byte-reproducible.
        """
        lines = [
            REPORT_HEADER,
            f"theorem {self.theorem.value}",
            f"trials {self.trials}",
            f"seed {self.seed}",
            f"min_angle_deg {math.degrees(self.min_angle):.12g}",
            f"pass_count {self.pass_count}",
            f"not_converged {self.not_converged}",
            f"resampled {self.resampled}",
            f"max_residual {self.max_residual!r}",
            f"p99_residual {self.p99_residual!r}",
            f"worst_case_input {self.worst_case_input}",
        ]
        return "\n".join(lines) + "\n"

    def dump_text(self) -> str:
        """Per-trial residuals, each followed by its configuration when one exists."""
        chunks = []
        for i, o in enumerate(self.outcomes):
            status = "not_converged" if o.not_converged else ("pass" if o.passed else "fail")
            chunks.append(f"# trial {i} residual {o.residual!r} {status} {o.inputs}\n")
            chunks.append(o.cfg_text)
        return "".join(chunks)


def trial_rng(seed: int, trial_index: int) -> np.random.Generator:
    """Independent stream for one trial; order of execution is irrelevant."""
    ss = np.random.SeedSequence(entropy=seed, spawn_key=(trial_index,))
    return np.random.Generator(np.random.PCG64(ss))


def random_angles(rng: np.random.Generator, min_angle: float) -> tuple[float, float, float]:
    """Uniform on the simplex alpha + beta + gamma = pi, each >= min_angle."""
    u, v = sorted(rng.random(2))
    spare = math.pi - 3.0 * min_angle
    alpha = min_angle + spare * u
    beta = min_angle + spare * (v - u)
    gamma = math.pi - alpha - beta
    return alpha, beta, gamma


def random_triangle(rng: np.random.Generator, min_angle: float) -> Triangle:
    """Circumdiameter 1, canonical pose (B at origin, C on +x)."""
    return triangle_from_angles(*random_angles(rng, min_angle))


def random_converse(rng: np.random.Generator, lo: float = 60.0 * DEG,
                    hi: float = 180.0 * DEG) -> tuple[ConverseParameters, int]:
    """Apex triple drawn uniformly from a box, rejected until valid."""
    for tries in range(MAX_RESAMPLES):
        d, e, f = lo + (hi - lo) * rng.random(3)
        params = ConverseParameters(float(d), float(e), float(f))
        try:
            cfg = converse_construct(params)
            cfg.P, cfg.Q, cfg.R
        except GeometryError:
            continue
        return params, tries
    raise RuntimeError("could not draw valid converse parameters")


def _hexes(*vals: float) -> str:
    return " ".join(float(v).hex() for v in vals)


def _draw_triangle(rng, min_angle):
    """Random triangle whose classic figure builds cleanly; also return resample count."""
    for tries in range(MAX_RESAMPLES):
        angles = random_angles(rng, min_angle)
        try:
            cfg = classic_morley(triangle_from_angles(*angles))
            cfg.P, cfg.Q, cfg.R
        except GeometryError:
            continue
        return angles, cfg, tries
    raise RuntimeError("could not draw a non-degenerate triangle")


def _normalized(cfg: MorleyConfiguration) -> MorleyConfiguration:
    """Translate to the centroid of ABC and scale to unit diameter."""
    c = Point((cfg.A.x + cfg.B.x + cfg.C.x) / 3.0, (cfg.A.y + cfg.B.y + cfg.C.y) / 3.0)
    k = 1.0 / cfg.diameter
    return MorleyConfiguration(*((getattr(cfg, n) - c) * k for n in "ABCXYZDEF"))


def cevian_concurrency_det(cfg: MorleyConfiguration) -> float:
    """|det| of the normalized lines AX, BY, CZ on a unit-diameter copy."""
    n = _normalized(cfg)
    rows = [line_through(p, q) for p, q in ((n.A, n.X), (n.B, n.Y), (n.C, n.Z))]
    return abs(float(np.linalg.det(np.array([[l.a, l.b, l.c] for l in rows]))))


def barycentric_crosscheck(cfg: MorleyConfiguration) -> float:
    """Rebuild A, B, C from the apex parameters (p, q, r) by cross products.

    D, E, F are read in barycentrics over XYZ as (-p:1:1), (1:-q:1),
    (1:1:-r); the predicted A = (-1:q:r), B, C and the perspector (p:q:r)
    are compared with the measured ones.
    """
    frame = bc.ReferenceFrame(cfg.inner())
    d = bc.cartesian_to_bary(frame, cfg.D)
    e = bc.cartesian_to_bary(frame, cfg.E)
    f = bc.cartesian_to_bary(frame, cfg.F)
    p, q, r = -d.u / (0.5 * (d.v + d.w)), -e.v / (0.5 * (e.w + e.u)), -f.w / (0.5 * (f.u + f.v))
    worst = max(abs(d.v - d.w) / abs(d.u), abs(e.w - e.u) / abs(e.v), abs(f.u - f.v) / abs(f.w))
    for pred, actual in zip(bc.flank_vertices(p, q, r), (cfg.A, cfg.B, cfg.C)):
        a, b = pred.canonical(), bc.cartesian_to_bary(frame, actual)
        worst = max(worst, abs(a.u - b.u), abs(a.v - b.v), abs(a.w - b.w))
    persp = bc.perspector(p, q, r)
    for ln in bc.cevians(p, q, r):
        worst = max(worst, abs(bc.incidence(ln, persp)))
    return worst


def _t6_check(cfg: MorleyConfiguration) -> tuple[float, bool]:
    """Recompute circumcenters from scratch and measure the three incidences."""
    P = circumcenter(cfg.A, cfg.Y, cfg.Z)
    Q = circumcenter(cfg.B, cfg.Z, cfg.X)
    R = circumcenter(cfg.C, cfg.X, cfg.Y)
    scale = cfg.diameter
    incidence = max(distance(cfg.D, P), distance(cfg.E, Q), distance(cfg.F, R)) / scale
    outer = cfg.outer()
    inside = all(point_in_triangle(p, outer) for p in (cfg.X, cfg.Y, cfg.Z))
    return max(incidence, equilateral_residual(cfg.inner())), inside


def run_trial(theorem: Theorem, seed: int, index: int, min_angle: float,
              tol: ToleranceProfile = DEFAULT_TOL, keep_cfg: bool = False) -> TrialOutcome:
    rng = trial_rng(seed, index)
    cfg_text = ""
    if theorem in (Theorem.T1, Theorem.T5_150):
        angles, cfg, extra = _draw_triangle(rng, min_angle)
        if theorem is Theorem.T1:
            res = equilateral_residual(cfg.inner())
            limit = tol.length_tol_rel
        else:
            res = max(abs(a - 150.0 * DEG) for a in six_angles(cfg, check_interior=False))
            limit = tol.angle_tol
        inputs = "angles " + _hexes(*angles)
        ok = res < limit
    elif theorem in (Theorem.T2, Theorem.T3):
        angles, classic, extra = _draw_triangle(rng, min_angle)
        params, extra2 = random_converse(rng)
        extra += extra2
        conv = converse_construct(params)
        if theorem is Theorem.T2:
            res = max(hypothesis_residuals(classic, tol).max(),
                      hypothesis_residuals(conv, tol).max())
            limit = tol.angle_tol
        else:
            res = max(cevian_concurrency_det(classic), cevian_concurrency_det(conv),
                      barycentric_crosscheck(classic), barycentric_crosscheck(conv))
            limit = tol.det_tol
        inputs = f"angles {_hexes(*angles)} apex {_hexes(params.d, params.e, params.f)}"
        ok = res < limit
        cfg = conv
    elif theorem is Theorem.T4:
        params, extra = random_converse(rng)
        cfg = converse_construct(params)
        res = max(split_identity_residuals(cfg))
        inputs = "apex " + _hexes(params.d, params.e, params.f)
        ok = res < tol.angle_tol
    else:
        from .solver import SolveRequest, solve

        angles, _, extra = _draw_triangle(rng, min_angle)
        result = solve(SolveRequest(angles, theorem6=True))
        inputs = "angles " + _hexes(*angles)
        cfg = result.cfg
        if keep_cfg and cfg is not None:
            cfg_text = dumps(cfg)
        if not result.converged:
            return TrialOutcome(result.residual, False, True, extra, inputs, cfg_text)
        res, inside = _t6_check(cfg)
        ok = inside and res < T6_TOL
    if keep_cfg and not cfg_text:
        cfg_text = dumps(cfg)
    return TrialOutcome(res, ok, False, extra, inputs, cfg_text)


def _run_chunk(args) -> list[TrialOutcome]:
    theorem, seed, indices, min_angle, tol, keep = args
    return [run_trial(theorem, seed, i, min_angle, tol, keep) for i in indices]


def run(plan: TrialPlan, workers: int = 1, keep_cfg: bool = False) -> VerificationReport:
    """Execute a plan; the report is identical for any ``workers``."""
    start = time.perf_counter()
    if workers <= 1:
        outcomes = _run_chunk((plan.theorem, plan.seed, range(plan.trials),
                               plan.min_angle, plan.tol, keep_cfg))
    else:
        size = math.ceil(plan.trials / workers)
        chunks = [
            (plan.theorem, plan.seed, range(lo, min(lo + size, plan.trials)),
             plan.min_angle, plan.tol, keep_cfg)
            for lo in range(0, plan.trials, size)
        ]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = [o for chunk in pool.map(_run_chunk, chunks) for o in chunk]

    judged = [o for o in outcomes if not o.not_converged]
    residuals = np.sort(np.array([o.residual for o in judged]))
    if residuals.size:
        worst = max(judged, key=lambda o: o.residual)
        max_res = float(residuals[-1])
        p99 = float(np.quantile(residuals, 0.99, method="inverted_cdf"))
    else:
        worst, max_res, p99 = None, 0.0, 0.0
    return VerificationReport(
        theorem=plan.theorem,
        trials=plan.trials,
        seed=plan.seed,
        min_angle=plan.min_angle,
        pass_count=sum(o.passed for o in outcomes),
        not_converged=sum(o.not_converged for o in outcomes),
        resampled=sum(o.resampled for o in outcomes),
        max_residual=max_res,
        p99_residual=p99,
        worst_case_input=worst.inputs if worst else "none",
        wall_time=time.perf_counter() - start,
        outcomes=outcomes,
    )
