import logging

import numpy as np

from ..analysis.diffops import Calculus
from ..analysis.energy import (
    bending_density,
    control_section,
    control_variation,
    estimate_energy,
    first_variation,
    random_variation,
    tension_first_variation,
)
from ..models.sections import SECTION_J, SIGMA2, SIGMA3
from .base import Outcome, SuiteRouter, rng_for

logger = logging.getLogger(__name__)

router = SuiteRouter("energy")

BENDING = {"sigma3": 12.0, "sigma2": 8.0, "J": 8.0}
CRITICAL_ERRORS = 3.0
CONTROL_ERRORS = 5.0
CONTROL_ANCHOR = np.full(8, 1.0 / np.sqrt(8.0))


def _base_density(section, settings) -> Outcome:
    value = bending_density(section, section.grassmannian.base, Calculus.from_settings(settings, method="jet"))
    expected = BENDING[section.name]
    return Outcome(f"Σ_a‖∇_{{e_a}}σ‖² = {expected:g}", value, abs(value - expected), settings.fd_tol)


def _estimate(section, settings, stream: int) -> Outcome:
    estimate = estimate_energy(
        section, settings.samples, settings.seed + stream, Calculus.from_settings(settings, method="jet")
    )
    expected = BENDING[section.name]
    density = (section.grassmannian.dim + expected) / 2.0
    residual = max(abs(estimate.mean_bending - expected), estimate.std_bending)
    return Outcome(
        f"mean bending {expected:g}, energy density {density:g}, constant across {settings.samples} samples",
        [estimate.mean_bending, estimate.std_bending, estimate.energy_density],
        residual,
        settings.fd_tol,
    )


def _first_variations(section, settings, stream: int) -> Outcome:
    rng = rng_for(settings, stream)
    calculus = Calculus.from_settings(settings, method="jet")
    ratios = []
    for index in range(settings.variations):
        variation = random_variation(section, rng, label=f"{section.name}.variation{index}")
        result = first_variation(
            variation,
            t_values=(settings.variation_step,),
            samples=settings.variation_samples,
            seed=settings.seed + stream + index,
            calculus=calculus,
        )
        ratios.append(abs(result.estimate) / result.standard_error if result.standard_error > 0 else 0.0)
    worst = max(ratios)
    return Outcome(
        f"|dE/dt| < {CRITICAL_ERRORS:g} standard errors for {settings.variations} random variations",
        ratios,
        worst,
        CRITICAL_ERRORS,
        passed=worst < CRITICAL_ERRORS,
    )


@router.check("sigma3.bending.base", anchor="Σ_a‖∇_{e_a}σ₃‖² = 12", provenance="derived")
def sigma3_base(settings):
    return _base_density(SIGMA3, settings)


@router.check("sigma2.bending.base", anchor="Σ_a‖∇_{e_a}σ₂‖² = 8", provenance="derived")
def sigma2_base(settings):
    return _base_density(SIGMA2, settings)


@router.check("J.bending.base", anchor="Σ_a‖∇_{e_a}𝔍‖² = 8", provenance="derived")
def j_base(settings):
    return _base_density(SECTION_J, settings)


@router.check("sigma3.energy.estimate", anchor="ℰ = (dim G(3,8) + ℬ)/2 = 13.5 per unit volume", provenance="derived")
def sigma3_estimate(settings):
    return _estimate(SIGMA3, settings, 41)


@router.check("sigma2.energy.estimate", anchor="ℰ = (dim G(2,7) + ℬ)/2 = 9 per unit volume", provenance="derived")
def sigma2_estimate(settings):
    return _estimate(SIGMA2, settings, 42)


@router.check("J.energy.estimate", anchor="ℰ = (dim G(2,8) + ℬ)/2 = 10 per unit volume", provenance="derived")
def j_estimate(settings):
    return _estimate(SECTION_J, settings, 43)


@router.check("sigma3.first_variation", anchor="σ₃: G(3,8) → E¹ is a harmonic map", provenance="derived")
def sigma3_variations(settings):
    return _first_variations(SIGMA3, settings, 51)


@router.check("sigma2.first_variation", anchor="σ₂: G(2,7) → E¹ is a harmonic map", provenance="derived")
def sigma2_variations(settings):
    return _first_variations(SIGMA2, settings, 52)


@router.check("J.first_variation", anchor="𝔍: G(2,8) → E¹ is a harmonic map", provenance="derived")
def j_variations(settings):
    return _first_variations(SECTION_J, settings, 53)


@router.check("control.first_variation", anchor="normalize(σ₃ + w) is not critical", provenance="derived")
def control_variations(settings):
    """Along the tension field first; the weight and random directions only if it is not decisive."""
    control = control_section(SIGMA3, CONTROL_ANCHOR)
    calculus = Calculus.from_settings(settings, method="jet")
    results = [tension_first_variation(control, settings.samples, settings.seed + 54, calculus)]
    if not results[0].exceeds(CONTROL_ERRORS):
        rng = rng_for(settings, 54)
        candidates = [control_variation(control, CONTROL_ANCHOR)]
        candidates += [random_variation(control, rng, label=f"control.variation{i}") for i in range(settings.variations)]
        for index, variation in enumerate(candidates, start=1):
            logger.info("control: previous direction not decisive, trying %s", variation.label)
            results.append(
                first_variation(
                    variation,
                    t_values=(settings.variation_step,),
                    samples=settings.variation_samples,
                    seed=settings.seed + 54 + index,
                    calculus=calculus,
                )
            )
            if results[-1].exceeds(CONTROL_ERRORS):
                break
    ratios = [abs(r.estimate) / r.standard_error if r.standard_error > 0 else 0.0 for r in results]
    best = max(ratios)
    return Outcome(
        f"|dE/dt| > {CONTROL_ERRORS:g} standard errors for some variation",
        ratios,
        best,
        CONTROL_ERRORS,
        passed=best > CONTROL_ERRORS,
    )
