"""φ: G(2,7) → G(3,8), u∧v ↦ e₀∧u∧v, and the bundle morphism Φ over it."""

import numpy as np

from ..analysis.diffops import Calculus
from ..analysis.energy import sample_points
from ..models.bundles import bundle_morphism_phi, fiber_project_normal, phi
from ..models.grassmann import Grassmannian, exp_action
from ..models.octonion import embed_imaginary
from ..models.sections import SIGMA2, SIGMA3
from .base import EXACT_TOL, Outcome, SuiteRouter, rng_for

router = SuiteRouter("diagram-phi")

G27 = Grassmannian(2, 7)
GEODESIC_TIMES = (0.3, 1.1, 2.5)
LAPLACIAN_POINTS = 5
ISOMETRY_DRAWS = 50


def lift_generator(z: np.ndarray) -> np.ndarray:
    """0 ⊕ Z acting on Im 𝕆."""
    lifted = np.zeros((8, 8))
    lifted[1:, 1:] = z
    return lifted


@router.check("diagram.commutes", anchor="Φ∘σ₂ = σ₃∘φ")
def diagram_commutes(settings):
    worst = 0.0
    points = sample_points(SIGMA2, settings.samples, settings.seed + 61)
    for point in points:
        pushed = bundle_morphism_phi(SIGMA2(point))
        worst = max(worst, float(np.linalg.norm(pushed.vec - SIGMA3.value(phi(point)))))
    return Outcome(f"agreement at {len(points)} random points of G(2,7)", worst, worst, settings.fiber_tol)


@router.check("diagram.geodesics", anchor="φ(exp(tZ)·P) = exp(t·(0⊕Z))·φ(P)", provenance="derived")
def diagram_geodesics(settings):
    mismatches = 0
    points = sample_points(SIGMA2, 10, settings.seed + 62)
    for point in points:
        for ell, j in G27.indices():
            z = G27.generator(ell, j, at=point)
            for t in GEODESIC_TIMES:
                mismatches += phi(exp_action(z, t, point)) != exp_action(lift_generator(z), t, phi(point))
    return Outcome("φ maps geodesics of G(2,7) onto geodesics of G(3,8)", float(mismatches), float(mismatches), 0.0)


@router.check("diagram.laplacian", anchor="(Δσ₃)∘φ = −4σ₃∘φ + Φ∘(Δσ₂)", provenance="derived")
def diagram_laplacian(settings):
    calculus = Calculus.from_settings(settings, method="jet")
    worst = 0.0
    for point in sample_points(SIGMA2, LAPLACIAN_POINTS, settings.seed + 63):
        image = phi(point)
        upstairs = calculus.rough_laplacian(SIGMA3, image).value
        downstairs = calculus.rough_laplacian(SIGMA2, point).value
        predicted = -4.0 * SIGMA3.value(image) + embed_imaginary(downstairs)
        worst = max(worst, float(np.linalg.norm(upstairs - predicted)))
    return Outcome("the four extra directions of G(3,8) contribute −4σ₃", worst, worst, settings.fd_tol)


@router.check("diagram.isometry", anchor="Φ: E_{2,7} → φ*E_{3,8} is a fiberwise isometry", provenance="trivial")
def diagram_isometry(settings):
    rng = rng_for(settings, 64)
    worst = 0.0
    for point in sample_points(SIGMA2, ISOMETRY_DRAWS, settings.seed + 64):
        x = fiber_project_normal(point, rng.standard_normal(7))
        y = fiber_project_normal(point, rng.standard_normal(7))
        fx, fy = bundle_morphism_phi(x), bundle_morphism_phi(y)
        worst = max(worst, abs(float(fx.vec @ fy.vec) - float(x.vec @ y.vec)))
    return Outcome("⟨Φx, Φy⟩ = ⟨x, y⟩", worst, worst, EXACT_TOL)
