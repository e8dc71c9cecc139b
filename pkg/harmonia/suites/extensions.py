"""The (1,2m) and (1,7) cases: Hopf fields on S^{2m−1} and the almost complex structure of S⁶.

Both are run through the same harmonicity criterion as σ₂, σ₃ and 𝔍:
Δσ ∥ σ and R_σ ≡ 0. Eigenvalues and bending densities are reported as
measured; only parallelism, criticality and constancy are asserted.
"""

import logging

import numpy as np

from ..analysis.diffops import Calculus
from ..analysis.energy import bending_density, sample_points
from ..models.sections import ACS6, hopf_section
from .base import Outcome, SuiteRouter

logger = logging.getLogger(__name__)

router = SuiteRouter("extensions")


def _parallel(section, settings, stream: int) -> Outcome:
    calculus = Calculus.from_settings(settings, method="jet")
    results = [
        calculus.rough_laplacian(section, point)
        for point in sample_points(section, settings.criticality_points, settings.seed + stream)
    ]
    estimates = np.array([r.eigen_estimate for r in results])
    logger.info("%s: measured Laplacian eigenvalue %.6f", section.name, estimates.mean())
    worst = max(r.residual for r in results)
    return Outcome(
        f"Δσ = fσ at {len(results)} random points (f reported, not asserted)",
        float(estimates.mean()),
        worst,
        settings.fd_tol,
    )


def _critical(section, settings, stream: int) -> Outcome:
    calculus = Calculus.from_settings(settings, method="jet")
    worst = 0.0
    points = sample_points(section, settings.criticality_points, settings.seed + stream)
    for point in points:
        worst = max(worst, float(np.max(np.abs(calculus.criticality_values(section, point)))))
    return Outcome(f"R_σ(e_a) = 0 at {len(points)} random points", worst, worst, settings.fd_tol)


def _constant_bending(section, settings, stream: int) -> Outcome:
    calculus = Calculus.from_settings(settings, method="jet")
    points = sample_points(section, settings.criticality_points, settings.seed + stream)
    values = np.array([bending_density(section, point, calculus) for point in points])
    spread = float(values.std())
    return Outcome(
        "Σ_a‖∇_{e_a}σ‖² constant (value reported, not asserted)",
        [float(values.mean()), spread],
        spread,
        settings.fd_tol,
    )


@router.check("hopf.laplacian.parallel", anchor="Hopf vector fields on S^{2m−1}: Δσ = −(2m−2)σ", provenance="derived")
def hopf_parallel(settings):
    return _parallel(hopf_section(settings.hopf_m), settings, 71)


@router.check("hopf.criticality", anchor="Hopf vector fields on odd spheres are harmonic maps", provenance="derived")
def hopf_critical(settings):
    return _critical(hopf_section(settings.hopf_m), settings, 72)


@router.check("hopf.bending", anchor="Σ_a‖∇_{e_a}σ‖² = 2m−2 on the unit sphere", provenance="derived")
def hopf_bending(settings):
    return _constant_bending(hopf_section(settings.hopf_m), settings, 73)


@router.check("acs6.laplacian.parallel", anchor="J_u = u × · on S⁶: Δ𝔍 ∥ 𝔍", provenance="derived")
def acs6_parallel(settings):
    return _parallel(ACS6, settings, 74)


@router.check("acs6.criticality", anchor="the almost complex structure of S⁶ is a harmonic map", provenance="derived")
def acs6_critical(settings):
    return _critical(ACS6, settings, 75)


@router.check("acs6.bending", anchor="Σ_a‖∇_{e_a}J‖² constant on S⁶", provenance="derived")
def acs6_bending(settings):
    return _constant_bending(ACS6, settings, 76)


@router.check("acs6.complex_structure", anchor="J_u² = −π_u, J_u skew on u^⊥", provenance="trivial")
def acs6_complex_structure(settings):
    worst = 0.0
    for point in sample_points(ACS6, settings.criticality_points, settings.seed + 77):
        op = ACS6.value(point)
        worst = max(worst, float(np.max(np.abs(op @ op + point.projector))), float(np.max(np.abs(op + op.T))))
    return Outcome("orthogonal complex structure on every u^⊥", worst, worst, settings.closed_form_tol)
