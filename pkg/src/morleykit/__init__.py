"""Morley's trisector theorem, its generalizations and their converse family."""
from .constructions import (
    ConverseParameters,
    MorleyConfiguration,
    classic_morley,
    converse_construct,
    converse_validity,
    hypothesis_residuals,
    inclination_angles,
    six_angles,
)
from .kernel import DEFAULT_TOL, Point, ToleranceProfile, Triangle, triangle_from_angles
from .render import RenderStyle, render_svg
from .solver import SolveRequest, SolveResult, solve
from .verifier import Theorem, TrialPlan, VerificationReport, run

__version__ = "0.1.0"
