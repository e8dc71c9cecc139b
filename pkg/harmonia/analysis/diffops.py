"""Covariant differential operators on sections.

Second derivatives are taken along geodesic surfaces
P_{t,s} = exp(t·e_a)·exp(s·e_b)·P and evaluated by one of four methods:

* ``jet``: differentiate the surface numerically, then apply the projector
  formula π₀(π₀′S₁ + S₂) (normal) or π₀(π₀′T₁ + T₂ + T₁π₀′)π₀ (skew);
* ``nested``: covariant finite differences, inner in s, outer in t;
* ``exact``: product rule over the frame slots of a multilinear section;
* ``checked``: ``jet`` and ``nested`` together, which must agree.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..errors import PathDisagreementError, PreconditionError
from ..models.bundles import SKEW
from ..models.grassmann import GeodesicSurface, OrientedSubspace, TangentVector, matrix_exponential
from ..models.sections import Section, pullback
from ..utils.numdiff import derivative, mixed_derivative

logger = logging.getLogger(__name__)

METHODS = ("checked", "jet", "nested", "exact")


@dataclass(frozen=True)
class SurfaceJet:
    value: np.ndarray
    first: np.ndarray
    mixed: np.ndarray
    pi0: np.ndarray
    dpi0: np.ndarray


@dataclass(frozen=True)
class LaplacianResult:
    section: str
    point: OrientedSubspace
    value: np.ndarray
    eigen_estimate: float
    residual: float


@dataclass(frozen=True)
class DerivativeTable:
    """First derivatives ∇_a σ and second derivatives ∇_a∇_{E_b} σ over a tangent basis."""

    point: OrientedSubspace
    labels: list[tuple[int, int]]
    first: list[np.ndarray]
    second: list[list[np.ndarray]]

    def curvature(self, a: int, b: int) -> np.ndarray:
        """R_{e_a, e_b}σ = −∇_a∇_b σ + ∇_b∇_a σ."""
        return -self.second[a][b] + self.second[b][a]


def _projector(frame: np.ndarray) -> np.ndarray:
    return np.eye(frame.shape[0]) - frame @ frame.T


def _slot_sum(form, cols: list[np.ndarray], replacements: dict[int, np.ndarray]) -> np.ndarray:
    args = [replacements.get(c, col) for c, col in enumerate(cols)]
    return form(*args)


def _require_form(section: Section) -> None:
    if section.form is None:
        raise PreconditionError(f"exact derivatives need a multilinear section, {section.name} has no form")


class Calculus:
    """Differentiation settings plus the operators that use them."""

    def __init__(self, h: float = 1e-3, tol: float = 1e-7, agreement_tol: float = 1e-5, method: str = "checked"):
        if method not in METHODS:
            raise PreconditionError(f"unknown differentiation method {method!r}")
        self.h = h
        self.tol = tol
        self.agreement_tol = agreement_tol
        self.method = method

    @classmethod
    def from_settings(cls, settings, method: str = "checked") -> "Calculus":
        return cls(settings.fd_step, settings.richardson_tol, settings.path_agreement_tol, method)

    def with_method(self, method: str) -> "Calculus":
        return Calculus(self.h, self.tol, self.agreement_tol, method)

    def _d(self, f):
        return derivative(f, h=self.h, tol=self.tol)

    # first derivatives

    def nabla(self, section: Section, point: OrientedSubspace, v: TangentVector, method: Optional[str] = None) -> np.ndarray:
        """∇_V σ at P: the fiber projection of d/dt σ(exp(tV)·P) at t = 0."""
        if v.base != point:
            raise PreconditionError("tangent vector is not based at the given point")
        frame = point.frame
        if (method or self.method) == "exact":
            _require_form(section)
            cols = list(frame.T)
            moved = v.mat @ frame
            ambient = sum(_slot_sum(section.form, cols, {c: moved[:, c]}) for c in range(point.k))
        else:
            ambient = self._d(lambda t: section.evaluate(matrix_exponential(v.mat, t) @ frame))
        return section.fiber.project(point.projector, ambient)

    # second derivatives

    def numeric_jet(self, section: Section, surface: GeodesicSurface) -> SurfaceJet:
        frame0 = surface.base.frame
        return SurfaceJet(
            value=section.evaluate(frame0),
            first=self._d(lambda s: section.evaluate(surface.frame(0.0, s))),
            mixed=mixed_derivative(lambda t, s: section.evaluate(surface.frame(t, s)), h=self.h, tol=self.tol),
            pi0=surface.base.projector,
            dpi0=self._d(lambda t: _projector(surface.frame(t, 0.0))),
        )

    def exact_jet(self, section: Section, surface: GeodesicSurface) -> SurfaceJet:
        _require_form(section)
        form = section.form
        cols = list(surface.base.frame.T)
        ft, fs, fts = surface.frame_jet()
        slots = range(len(cols))
        first = sum(_slot_sum(form, cols, {c: fs[:, c]}) for c in slots)
        mixed = sum(_slot_sum(form, cols, {c: fts[:, c]}) for c in slots)
        for c in slots:
            for d in slots:
                if c != d:
                    mixed = mixed + _slot_sum(form, cols, {c: ft[:, c], d: fs[:, d]})
        return SurfaceJet(
            value=section.evaluate(surface.base.frame),
            first=first,
            mixed=mixed,
            pi0=surface.base.projector,
            dpi0=surface.projector_derivative(),
        )

    def _from_jet(self, section: Section, jet: SurfaceJet) -> np.ndarray:
        return section.fiber.second_derivative(jet.pi0, jet.dpi0, jet.first, jet.mixed)

    def _nested(self, section: Section, surface: GeodesicSurface) -> np.ndarray:
        fiber = section.fiber

        def inner(t: float) -> np.ndarray:
            slope = self._d(lambda s: section.evaluate(surface.frame(t, s)))
            return fiber.project(_projector(surface.frame(t, 0.0)), slope)

        return fiber.project(surface.base.projector, self._d(inner))

    def second_nabla(self, section: Section, surface: GeodesicSurface, method: Optional[str] = None) -> np.ndarray:
        """∇_{e_i^k}∇_{E_j^ℓ}σ at the base of the surface."""
        method = method or self.method
        if method == "exact":
            return self._from_jet(section, self.exact_jet(section, surface))
        if method == "nested":
            return self._nested(section, surface)
        assembled = self._from_jet(section, self.numeric_jet(section, surface))
        if method == "jet":
            return assembled
        nested = self._nested(section, surface)
        gap = section.fiber.norm(assembled - nested)
        if gap > self.agreement_tol:
            raise PathDisagreementError(
                f"{section.name} on surface {surface.indices}: jet and nested paths differ by {gap:.2e}"
            )
        logger.debug("%s surface %s: path gap %.2e", section.name, surface.indices, gap)
        return assembled

    # derived operators

    def rough_laplacian(
        self, section: Section, point: Optional[OrientedSubspace] = None, frame: str = "geodesic"
    ) -> LaplacianResult:
        """Δσ = Σ_a ∇_{e_a}∇_{E_a}σ; the ∇_{∇E}E correction vanishes along geodesics."""
        grassmannian = section.grassmannian
        point = point if point is not None else grassmannian.base
        if frame == "geodesic":
            value = self._laplacian_sum(section, point)
        elif frame == "pullback":
            g = point.isometry()
            pulled = self._laplacian_sum(pullback(section, g), grassmannian.base)
            value = g @ pulled @ g.T if section.fiber is SKEW else g @ pulled
        else:
            raise PreconditionError(f"unknown Laplacian frame {frame!r}")

        sigma = section.value(point)
        fiber = section.fiber
        f = fiber.inner(value, sigma) / fiber.inner(sigma, sigma)
        return LaplacianResult(
            section=section.name,
            point=point,
            value=value,
            eigen_estimate=f,
            residual=fiber.norm(value - f * sigma),
        )

    def _laplacian_sum(self, section: Section, point: OrientedSubspace) -> np.ndarray:
        grassmannian = section.grassmannian
        total = None
        for ell, j in grassmannian.indices():
            term = self.second_nabla(section, grassmannian.surface(j, ell, j, ell, at=point))
            total = term if total is None else total + term
        return total

    def curvature(
        self, section: Section, i: int, k: int, j: int, ell: int, at: Optional[OrientedSubspace] = None
    ) -> np.ndarray:
        """R_{e_i^k, e_j^ℓ}σ = −∇_{e_i^k}∇_{E_j^ℓ}σ + ∇_{e_j^ℓ}∇_{E_i^k}σ."""
        grassmannian = section.grassmannian
        return -self.second_nabla(section, grassmannian.surface(i, k, j, ell, at=at)) + self.second_nabla(
            section, grassmannian.surface(j, ell, i, k, at=at)
        )

    def table(self, section: Section, point: Optional[OrientedSubspace] = None) -> DerivativeTable:
        grassmannian = section.grassmannian
        point = point if point is not None else grassmannian.base
        labels = list(grassmannian.indices())
        first = [self.nabla(section, point, grassmannian.basis_tangent(ell, j, at=point)) for ell, j in labels]
        second = [
            [self.second_nabla(section, grassmannian.surface(ja, la, jb, lb, at=point)) for lb, jb in labels]
            for la, ja in labels
        ]
        return DerivativeTable(point=point, labels=labels, first=first, second=second)

    def criticality_form(
        self, section: Section, point: OrientedSubspace, x: TangentVector, table: Optional[DerivativeTable] = None
    ) -> float:
        """R_σ(X) = Σ_a ⟨R_{X,e_a}σ, ∇_{e_a}σ⟩ with X expanded in the basis at P."""
        if x.base != point:
            raise PreconditionError("tangent vector is not based at the given point")
        table = table if table is not None else self.table(section, point)
        coords = section.grassmannian.coordinates(x)
        fiber = section.fiber
        total = 0.0
        for a in range(len(table.labels)):
            r = sum(coords[b] * table.curvature(b, a) for b in range(len(table.labels)) if coords[b] != 0.0)
            if isinstance(r, np.ndarray):
                total += fiber.inner(r, table.first[a])
        return total

    def criticality_values(self, section: Section, point: Optional[OrientedSubspace] = None) -> np.ndarray:
        """R_σ on every basis direction at P."""
        table = self.table(section, point)
        fiber = section.fiber
        size = len(table.labels)
        return np.array(
            [sum(fiber.inner(table.curvature(b, a), table.first[a]) for a in range(size)) for b in range(size)]
        )


def nabla(section: Section, point: OrientedSubspace, v: TangentVector, method: str = "jet", **options) -> np.ndarray:
    return Calculus(method=method, **options).nabla(section, point, v)


def second_nabla(section: Section, surface: GeodesicSurface, method: str = "checked", **options) -> np.ndarray:
    return Calculus(method=method, **options).second_nabla(section, surface)


def rough_laplacian(
    section: Section, point: Optional[OrientedSubspace] = None, frame: str = "geodesic", method: str = "checked", **options
) -> LaplacianResult:
    return Calculus(method=method, **options).rough_laplacian(section, point, frame)


def curvature(section: Section, i: int, k: int, j: int, ell: int, method: str = "checked", **options) -> np.ndarray:
    return Calculus(method=method, **options).curvature(section, i, k, j, ell)


def criticality_form(
    section: Section, point: OrientedSubspace, x: TangentVector, method: str = "jet", **options
) -> float:
    return Calculus(method=method, **options).criticality_form(section, point, x)
