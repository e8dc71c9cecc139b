"""Total bending, energy densities and first-variation tests.

All quantities are densities: Monte Carlo means over points drawn from the
invariant measure of G(k, n). The energy density of a unit section is
(dim G + mean bending)/2, the Sasaki pullback of the identity base map
contributing the constant dim G.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from ..errors import PreconditionError
from ..models.bundles import NORMAL
from ..models.grassmann import OrientedSubspace, random_point
from ..models.sections import Section
from .diffops import Calculus

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EnergyEstimate:
    section: str
    samples: int
    mean_bending: float
    std_bending: float
    energy_density: float
    seed: int


@dataclass(frozen=True)
class VariationResult:
    section: str
    estimate: float
    standard_error: float
    samples: int

    @property
    def inconclusive(self) -> bool:
        return self.standard_error > abs(self.estimate)

    def within(self, errors: float) -> bool:
        return abs(self.estimate) < errors * self.standard_error

    def exceeds(self, errors: float) -> bool:
        return abs(self.estimate) > errors * self.standard_error


def sample_points(section: Section, count: int, seed: int) -> list[OrientedSubspace]:
    rng = np.random.default_rng(seed)
    return [random_point(section.n, section.k, rng) for _ in range(count)]


def bending_density(section: Section, point: OrientedSubspace, calculus: Optional[Calculus] = None) -> float:
    """Σ_a ‖∇_{e_a}σ‖² over the orthonormal basis at P."""
    calculus = calculus or Calculus(method="jet")
    grassmannian = section.grassmannian
    fiber = section.fiber
    return float(
        sum(fiber.inner(d, d) for d in (calculus.nabla(section, point, v) for v in grassmannian.tangent_basis(at=point)))
    )


def estimate_energy(
    section: Section, samples: int, seed: int, calculus: Optional[Calculus] = None
) -> EnergyEstimate:
    if samples < 1:
        raise PreconditionError("estimate_energy needs at least one sample")
    densities = np.array([bending_density(section, p, calculus) for p in sample_points(section, samples, seed)])
    mean = float(np.mean(densities))
    std = float(np.std(densities, ddof=1)) if samples > 1 else 0.0
    return EnergyEstimate(
        section=section.name,
        samples=samples,
        mean_bending=mean,
        std_bending=std,
        energy_density=(section.grassmannian.dim + mean) / 2.0,
        seed=seed,
    )


class Variation:
    """σ_t = normalize(σ + t·W) with W a smooth field tangent to the fiber sphere at σ."""

    def __init__(self, section: Section, direction: Callable[[np.ndarray], np.ndarray], label: str = "variation"):
        self.section = section
        self.direction = direction
        self.label = label

    def field(self, frame: np.ndarray) -> np.ndarray:
        """W(P): the raw direction projected to the fiber and made orthogonal to σ(P)."""
        fiber = self.section.fiber
        sigma = self.section.evaluate(frame)
        pi = np.eye(frame.shape[0]) - frame @ frame.T
        w = fiber.project(pi, self.direction(frame))
        return w - fiber.inner(w, sigma) / fiber.inner(sigma, sigma) * sigma

    def at(self, t: float) -> Section:
        base = self.section
        fiber = base.fiber

        def evaluate(frame: np.ndarray) -> np.ndarray:
            if t == 0.0:
                return base.evaluate(frame)
            return fiber.normalize(base.evaluate(frame) + t * self.field(frame))

        return Section(f"{base.name}+{t:g}·{self.label}", base.k, base.n, fiber, evaluate)


def _skew_part(m: np.ndarray) -> np.ndarray:
    return 0.5 * (m - m.T)


def random_variation(section: Section, rng: np.random.Generator, label: str = "variation") -> Variation:
    """W from a random quadratic polynomial in the projector Π = F·Fᵀ.

    Π is unchanged by F ↦ F·R for R ∈ SO(k), so W is a genuine field on G(k, n).
    """
    n = section.n
    mats = [rng.standard_normal((n, n)) for _ in range(6)]
    if section.fiber is NORMAL:
        vecs = [rng.standard_normal(n) for _ in range(3)]

        def direction(frame: np.ndarray) -> np.ndarray:
            plane = frame @ frame.T
            return mats[0] @ vecs[0] + mats[1] @ plane @ vecs[1] + mats[2] @ plane @ mats[3] @ plane @ vecs[2]

    else:

        def direction(frame: np.ndarray) -> np.ndarray:
            plane = frame @ frame.T
            return _skew_part(mats[0] + mats[1] @ plane @ mats[2] + plane @ mats[3] @ plane @ mats[4] @ mats[5])

    return Variation(section, direction, label)


def first_variation(
    variation: Variation,
    t_values: tuple[float, ...] = (1e-2,),
    samples: int = 64,
    seed: int = 0,
    calculus: Optional[Calculus] = None,
) -> VariationResult:
    """dE/dt at t = 0 by central differences, the same points reused for every t."""
    if samples < 2:
        raise PreconditionError("first_variation needs at least two samples")
    calculus = calculus or Calculus(method="jet")
    section = variation.section
    points = sample_points(section, samples, seed)
    estimates = np.zeros(samples)
    for t in t_values:
        plus, minus = variation.at(t), variation.at(-t)
        for idx, point in enumerate(points):
            gap = bending_density(plus, point, calculus) - bending_density(minus, point, calculus)
            estimates[idx] += gap / (4.0 * t)
    estimates /= len(t_values)
    result = VariationResult(
        section=section.name,
        estimate=float(np.mean(estimates)),
        standard_error=float(np.std(estimates, ddof=1) / np.sqrt(samples)),
        samples=samples,
    )
    if result.inconclusive:
        logger.warning(
            "%s: first variation %.3g with standard error %.3g is inconclusive",
            variation.label,
            result.estimate,
            result.standard_error,
        )
    return result


def control_section(base: Section, anchor: np.ndarray, weight: float = 1.0) -> Section:
    """normalize(σ + c·w), w the part of π_P(a) orthogonal to σ(P); not critical for c ≠ 0."""
    if base.fiber is not NORMAL:
        raise PreconditionError("the control section is built over a normal bundle")
    anchor = np.asarray(anchor, dtype=float)

    def evaluate(frame: np.ndarray) -> np.ndarray:
        sigma = base.evaluate(frame)
        w = anchor - frame @ (frame.T @ anchor)
        w = w - np.dot(w, sigma) * sigma
        return NORMAL.normalize(sigma + weight * w)

    return Section(f"{base.name}~{weight:g}", base.k, base.n, NORMAL, evaluate)


def control_variation(control: Section, anchor: np.ndarray) -> Variation:
    """Moves the control section along its own weight parameter."""
    anchor = np.asarray(anchor, dtype=float)
    return Variation(control, lambda frame: anchor - frame @ (frame.T @ anchor), label="weight")


def tension(section: Section, point: OrientedSubspace, calculus: Optional[Calculus] = None) -> np.ndarray:
    """τ(σ) = Δσ − ⟨Δσ, σ⟩σ; zero exactly where σ is harmonic."""
    calculus = calculus or Calculus(method="jet")
    laplacian = calculus.rough_laplacian(section, point)
    return laplacian.value - laplacian.eigen_estimate * section.value(point)


def tension_first_variation(
    section: Section, samples: int = 64, seed: int = 0, calculus: Optional[Calculus] = None
) -> VariationResult:
    """dE/dt at t = 0 along W = τ(σ), in weak form −⟨Δσ, W⟩ = −‖τ‖² per point.

    The pointwise divergence term integrates to zero over G(k, n) and is dropped.
    """
    if samples < 2:
        raise PreconditionError("tension_first_variation needs at least two samples")
    calculus = calculus or Calculus(method="jet")
    fiber = section.fiber
    estimates = np.array(
        [-fiber.inner(tau, tau) for tau in (tension(section, p, calculus) for p in sample_points(section, samples, seed))]
    )
    result = VariationResult(
        section=section.name,
        estimate=float(np.mean(estimates)),
        standard_error=float(np.std(estimates, ddof=1) / np.sqrt(samples)),
        samples=samples,
    )
    logger.info("%s: tension variation %.3g ± %.3g", section.name, result.estimate, result.standard_error)
    return result
