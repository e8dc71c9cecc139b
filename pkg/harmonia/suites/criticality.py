import numpy as np

from ..analysis.diffops import Calculus
from ..analysis.energy import sample_points
from ..models.sections import SECTION_J, SIGMA2, SIGMA3
from .base import Outcome, SuiteRouter

router = SuiteRouter("criticality")


def _at_base(section, settings) -> Outcome:
    values = Calculus.from_settings(settings).criticality_values(section)
    worst = float(np.max(np.abs(values)))
    return Outcome(f"R_σ(e_a) = 0 on all {values.size} basis directions", worst, worst, settings.closed_form_tol)


def _sweep(section, settings, stream: int) -> Outcome:
    calculus = Calculus.from_settings(settings, method="jet")
    worst = 0.0
    points = sample_points(section, settings.criticality_points, settings.seed + stream)
    for point in points:
        worst = max(worst, float(np.max(np.abs(calculus.criticality_values(section, point)))))
    return Outcome(f"R_σ(e_a) = 0 at {len(points)} random points", worst, worst, settings.fd_tol)


@router.check("sigma3.criticality.base", anchor="R_{σ₃}(X) = Σ_a⟨R_{X,e_a}σ₃, ∇_{e_a}σ₃⟩ = 0")
def sigma3_base(settings):
    return _at_base(SIGMA3, settings)


@router.check("sigma2.criticality.base", anchor="R_{σ₂} = φ*R_{σ₃} = 0")
def sigma2_base(settings):
    return _at_base(SIGMA2, settings)


@router.check("J.criticality.base", anchor="R_𝔍(e_i^ℓ) = 0")
def j_base(settings):
    return _at_base(SECTION_J, settings)


@router.check("sigma3.criticality.random", anchor="R_{σ₃} ≡ 0 on G(3,8)", provenance="derived")
def sigma3_random(settings):
    return _sweep(SIGMA3, settings, 31)


@router.check("sigma2.criticality.random", anchor="R_{σ₂} ≡ 0 on G(2,7)", provenance="derived")
def sigma2_random(settings):
    return _sweep(SIGMA2, settings, 32)


@router.check("J.criticality.random", anchor="R_𝔍 ≡ 0 on G(2,8)", provenance="derived")
def j_random(settings):
    return _sweep(SECTION_J, settings, 33)
