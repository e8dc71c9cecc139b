"""No parallel unit sections: transport along γ_a, then differentiate around the loop a ↦ γ_a(t).

γ_a(t) = e₀∧(cos t·u_a + sin t·v)∧(cos t·v_a + sin t·w) with
u_a = cos a·e₁ + sin a·e₂, v_a = −sin a·e₁ + cos a·e₂, v = e₃, w = e₄.
A parallel section V would satisfy V(γ_a(t)) = −sin t·u_a + cos t·v, whose
covariant derivative around the loop has norm sin²t ≠ 0.
"""

from typing import Optional

import numpy as np

from ..config import Settings, get_settings
from ..models.bundles import NORMAL, FiberPath, ParallelTransport, covariant_derivative_normal
from ..models.grassmann import OrientedSubspace
from ..models.report import VerificationReport
from .base import Outcome, SuiteRouter

router = SuiteRouter("parallel-obstruction")

T_VALUES = (np.pi / 6, np.pi / 4, np.pi / 3)
TRANSPORT_ANGLES = (0.0, np.pi / 2, 5 * np.pi / 4)
LOOP_ANGLES = tuple(2 * np.pi * q / 12 for q in range(12))

_E = np.eye(8)
V, W = _E[3], _E[4]


def u_vec(a: float) -> np.ndarray:
    return np.cos(a) * _E[1] + np.sin(a) * _E[2]


def v_vec(a: float) -> np.ndarray:
    return -np.sin(a) * _E[1] + np.cos(a) * _E[2]


def gamma(a: float, t: float) -> OrientedSubspace:
    frame = np.column_stack(
        [_E[0], np.cos(t) * u_vec(a) + np.sin(t) * V, np.cos(t) * v_vec(a) + np.sin(t) * W]
    )
    return OrientedSubspace(frame)


def candidate(a: float, t: float) -> np.ndarray:
    """The would-be parallel section along γ_a: −sin t·u_a + cos t·v."""
    return -np.sin(t) * u_vec(a) + np.cos(t) * V


def loop_derivative_norm(t: float, a: float, settings) -> float:
    path = FiberPath(curve=lambda b: gamma(b, t), value=lambda b: candidate(b, t), fiber=NORMAL)
    return covariant_derivative_normal(path, a, h=settings.fd_step, tol=settings.richardson_tol).norm()


@router.check("obstruction.transport", anchor="V(γ_a(t)) = −sin t·u_a + cos t·v")
def transport_matches(settings):
    worst = 0.0
    for a in TRANSPORT_ANGLES:
        transport = ParallelTransport(
            lambda t, a=a: gamma(a, t),
            NORMAL,
            step=settings.transport_step,
            tol=settings.transport_tol,
            max_halvings=settings.transport_max_halvings,
        )
        for t in T_VALUES:
            moved = transport(V, t)
            worst = max(worst, float(np.linalg.norm(moved.vec - candidate(a, t))))
    return Outcome(
        f"projected midpoint transport of e₃ at {len(TRANSPORT_ANGLES) * len(T_VALUES)} (a, t) pairs",
        worst,
        worst,
        1e-7,
    )


@router.check("obstruction.loop_derivative", anchor="‖D/da V(c(a))‖ = ‖π_a(−sin t·v_a)‖ = sin²t", provenance="derived")
def loop_derivative(settings):
    norms, worst = [], 0.0
    for t in T_VALUES:
        values = [loop_derivative_norm(t, a, settings) for a in LOOP_ANGLES]
        norms.append(values[0])
        worst = max(worst, max(abs(value - np.sin(t) ** 2) for value in values))
    return Outcome("sin²t = 0.25, 0.5, 0.75 for t = π/6, π/4, π/3", norms, worst, 1e-5)


@router.check("obstruction.positive", anchor="D/da V(c(a)) ≠ 0 for 0 < t < π", provenance="derived")
def obstruction_positive(settings):
    smallest = min(loop_derivative_norm(t, a, settings) for t in T_VALUES for a in LOOP_ANGLES[::3])
    return Outcome("obstruction bounded away from zero", smallest, 0.0, 0.0, passed=smallest > settings.fd_tol)


@router.check("obstruction.degenerate", anchor="t = 0 collapses the loop", provenance="trivial")
def degenerate_loop(settings):
    value = max(loop_derivative_norm(0.0, a, settings) for a in LOOP_ANGLES[::3])
    return Outcome("0", value, value, settings.fd_tol)


def parallel_obstruction_report(settings: Optional[Settings] = None) -> VerificationReport:
    """‖D/da V(c(a))‖ at t = π/6, π/4, π/3 against sin²t."""
    return router.run_one("obstruction.loop_derivative", settings or get_settings())
