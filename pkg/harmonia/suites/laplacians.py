import numpy as np

from ..analysis.diffops import Calculus
from ..analysis.energy import bending_density, sample_points
from ..models.sections import SECTION_J, SIGMA2, SIGMA3
from .base import Outcome, SuiteRouter

router = SuiteRouter("laplacians")

EIGENVALUES = {"sigma3": -12.0, "sigma2": -8.0, "J": -8.0}
PULLBACK_POINTS = 5


def _at_base(section, settings) -> Outcome:
    expected = EIGENVALUES[section.name]
    result = Calculus.from_settings(settings).rough_laplacian(section)
    residual = max(abs(result.eigen_estimate - expected), result.residual)
    return Outcome(f"Δ{section.name} = {expected:g}·{section.name}", result.eigen_estimate, residual, settings.closed_form_tol)


def _sweep(section, settings, stream: int) -> Outcome:
    expected = EIGENVALUES[section.name]
    calculus = Calculus.from_settings(settings, method="jet")
    results = [
        calculus.rough_laplacian(section, point)
        for point in sample_points(section, settings.random_points, settings.seed + stream)
    ]
    estimates = np.array([r.eigen_estimate for r in results])
    spread = float(estimates.max() - estimates.min())
    residual = max(spread, float(np.max(np.abs(estimates - expected))), max(r.residual for r in results))
    return Outcome(
        f"f = {expected:g} with spread below tolerance at {len(results)} random points",
        [float(estimates.mean()), spread],
        residual,
        settings.fd_tol,
    )


def _bending_identity(section, settings) -> Outcome:
    calculus = Calculus.from_settings(settings)
    base = section.grassmannian.base
    result = calculus.rough_laplacian(section)
    sigma = section.value(base)
    bending = bending_density(section, base, calculus.with_method("jet"))
    expected = -EIGENVALUES[section.name]
    residual = max(abs(section.fiber.inner(result.value, sigma) + bending), abs(bending - expected))
    return Outcome(f"⟨Δσ, σ⟩ = −Σ‖∇σ‖² = {-expected:g}", bending, residual, settings.fd_tol)


@router.check("sigma3.laplacian.base", anchor="Δσ₃ = −12σ₃")
def sigma3_base(settings):
    return _at_base(SIGMA3, settings)


@router.check("sigma2.laplacian.base", anchor="Δσ₂ = −8σ₂")
def sigma2_base(settings):
    return _at_base(SIGMA2, settings)


@router.check("J.laplacian.base", anchor="Δ𝔍 = −8𝔍")
def j_base(settings):
    return _at_base(SECTION_J, settings)


@router.check("sigma3.laplacian.random", anchor="Δσ₃ = −12σ₃ on G(3,8)", provenance="derived")
def sigma3_random(settings):
    return _sweep(SIGMA3, settings, 11)


@router.check("sigma2.laplacian.random", anchor="Δσ₂ = −8σ₂ on G(2,7)", provenance="derived")
def sigma2_random(settings):
    return _sweep(SIGMA2, settings, 12)


@router.check("J.laplacian.random", anchor="Δ𝔍 = −8𝔍 on G(2,8)", provenance="derived")
def j_random(settings):
    return _sweep(SECTION_J, settings, 13)


@router.check("sigma3.laplacian.bending_identity", anchor="⟨Δσ, σ⟩ = −Σ_a‖∇_{e_a}σ‖²", provenance="derived")
def sigma3_bending_identity(settings):
    return _bending_identity(SIGMA3, settings)


@router.check("sigma2.laplacian.bending_identity", anchor="⟨Δσ, σ⟩ = −Σ_a‖∇_{e_a}σ‖²", provenance="derived")
def sigma2_bending_identity(settings):
    return _bending_identity(SIGMA2, settings)


@router.check("J.laplacian.bending_identity", anchor="⟨Δσ, σ⟩ = −Σ_a‖∇_{e_a}σ‖²", provenance="derived")
def j_bending_identity(settings):
    return _bending_identity(SECTION_J, settings)


@router.check("laplacian.pullback_frame", anchor="Δσ(P) = g·Δσ^g(base), σ^g(Q) = g⁻¹σ(gQ)", provenance="derived")
def pullback_frame(settings):
    calculus = Calculus.from_settings(settings, method="jet")
    worst = 0.0
    for stream, section in enumerate((SIGMA3, SIGMA2, SECTION_J), start=21):
        for point in sample_points(section, PULLBACK_POINTS, settings.seed + stream):
            direct = calculus.rough_laplacian(section, point, frame="geodesic")
            pulled = calculus.rough_laplacian(section, point, frame="pullback")
            worst = max(worst, section.fiber.norm(direct.value - pulled.value))
    return Outcome("geodesic-frame and pull-back Laplacians agree", worst, worst, settings.fd_tol)
