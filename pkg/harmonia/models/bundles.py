"""Normal and skew-operator bundles over oriented Grassmannians.

Two fibers over a point P:

* normal: vectors x ∈ ℝⁿ with x ⊥ P, inner product the dot product;
* skew: skew operators T on ℝⁿ with T|_P = 0, inner product (1/6)·tr(SᵀT).

Both carry the connection obtained by differentiating in the ambient space
and projecting back onto the fiber.
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, Optional, Union

import numpy as np

from ..errors import PreconditionError, TransportError
from ..utils.linalg import require_skew
from ..utils.numdiff import derivative
from .grassmann import OrientedSubspace
from .octonion import embed_imaginary

logger = logging.getLogger(__name__)

FIBER_TOL = 1e-9
SKEW_SCALE = 1.0 / 6.0


class Fiber(ABC):
    """How a bundle projects, measures and differentiates its fiber values."""

    kind: str

    @abstractmethod
    def project(self, pi: np.ndarray, value: np.ndarray) -> np.ndarray:
        ...

    @abstractmethod
    def inner(self, a: np.ndarray, b: np.ndarray) -> float:
        ...

    @abstractmethod
    def violation(self, point: OrientedSubspace, value: np.ndarray) -> float:
        """Size of the fiber-constraint defect of ``value`` over ``point``."""

    @abstractmethod
    def second_derivative(
        self, pi0: np.ndarray, dpi0: np.ndarray, first: np.ndarray, mixed: np.ndarray
    ) -> np.ndarray:
        """Second covariant derivative assembled from a surface jet."""

    @abstractmethod
    def transport_rate(self, dpi: np.ndarray, value: np.ndarray) -> np.ndarray:
        """Ambient velocity of a parallel field given the projector velocity."""

    @abstractmethod
    def element(self, point: OrientedSubspace, value: np.ndarray):
        ...

    def norm(self, a: np.ndarray) -> float:
        return float(np.sqrt(max(self.inner(a, a), 0.0)))

    def normalize(self, a: np.ndarray) -> np.ndarray:
        return a / self.norm(a)

    def check(self, point: OrientedSubspace, value: np.ndarray, tol: float = FIBER_TOL) -> None:
        defect = self.violation(point, value)
        if defect > tol:
            raise PreconditionError(f"{self.kind} fiber constraint violated by {defect:.2e}")


class NormalFiber(Fiber):
    kind = "normal"

    def project(self, pi, value):
        return pi @ value

    def inner(self, a, b):
        return float(np.dot(a, b))

    def violation(self, point, value):
        value = np.asarray(value, dtype=float)
        if value.shape != (point.n,):
            raise PreconditionError(f"normal fiber value must have shape ({point.n},), got {value.shape}")
        return float(np.max(np.abs(point.frame.T @ value), initial=0.0))

    def second_derivative(self, pi0, dpi0, first, mixed):
        return pi0 @ (dpi0 @ first + mixed)

    def transport_rate(self, dpi, value):
        return dpi @ value

    def element(self, point, value):
        return NormalElement(point, value)


class SkewFiber(Fiber):
    kind = "skew"

    def project(self, pi, value):
        return pi @ value @ pi

    def inner(self, a, b):
        return SKEW_SCALE * float(np.sum(a * b))

    def violation(self, point, value):
        value = np.asarray(value, dtype=float)
        if value.shape != (point.n, point.n):
            raise PreconditionError(f"skew fiber value must have shape ({point.n}, {point.n})")
        return max(
            float(np.max(np.abs(value + value.T), initial=0.0)),
            float(np.max(np.abs(value @ point.frame), initial=0.0)),
        )

    def second_derivative(self, pi0, dpi0, first, mixed):
        return pi0 @ (dpi0 @ first + mixed + first @ dpi0) @ pi0

    def transport_rate(self, dpi, value):
        return dpi @ value + value @ dpi

    def element(self, point, value):
        return SkewElement(point, value)


NORMAL = NormalFiber()
SKEW = SkewFiber()


@dataclass(frozen=True, eq=False)
class NormalElement:
    base: OrientedSubspace
    vec: np.ndarray

    fiber = NORMAL

    def __post_init__(self):
        vec = np.array(self.vec, dtype=float)
        NORMAL.check(self.base, vec)
        vec.setflags(write=False)
        object.__setattr__(self, "vec", vec)

    @property
    def value(self) -> np.ndarray:
        return self.vec

    def norm(self) -> float:
        return NORMAL.norm(self.vec)

    def is_unit(self, tol: float = FIBER_TOL) -> bool:
        return abs(self.norm() - 1.0) <= tol


@dataclass(frozen=True, eq=False)
class SkewElement:
    base: OrientedSubspace
    op: np.ndarray

    fiber = SKEW

    def __post_init__(self):
        op = np.array(self.op, dtype=float)
        SKEW.check(self.base, op)
        op.setflags(write=False)
        object.__setattr__(self, "op", op)

    @property
    def value(self) -> np.ndarray:
        return self.op

    def norm(self) -> float:
        return SKEW.norm(self.op)

    def is_unit(self, tol: float = FIBER_TOL) -> bool:
        return abs(self.norm() - 1.0) <= tol


BundleElement = Union[NormalElement, SkewElement]


def fiber_project_normal(point: OrientedSubspace, x: np.ndarray) -> NormalElement:
    return NormalElement(point, point.projector @ np.asarray(x, dtype=float))


def fiber_project_skew(point: OrientedSubspace, t: np.ndarray) -> SkewElement:
    """Π_P(T) = π_P∘T∘π_P."""
    t = np.asarray(t, dtype=float)
    require_skew(t)
    return SkewElement(point, SKEW.project(point.projector, t))


@dataclass(frozen=True)
class FiberPath:
    """A base curve with a fiber curve over it, optionally with its ambient derivative."""

    curve: Callable[[float], OrientedSubspace]
    value: Callable[[float], np.ndarray]
    fiber: Fiber = NORMAL
    velocity: Optional[Callable[[float], np.ndarray]] = None

    def at(self, t: float) -> BundleElement:
        return self.fiber.element(self.curve(t), self.value(t))


def covariant_derivative(
    path: FiberPath, t: float, h: float = 1e-3, tol: float = 1e-7
) -> BundleElement:
    """D/dt of the fiber curve: the ambient derivative projected onto the fiber."""
    point = path.curve(t)
    if path.velocity is not None:
        ambient = np.asarray(path.velocity(t), dtype=float)
    else:
        ambient = derivative(lambda d: path.value(t + d), h=h, tol=tol)
    return path.fiber.element(point, path.fiber.project(point.projector, ambient))


def covariant_derivative_normal(path: FiberPath, t: float, h: float = 1e-3, tol: float = 1e-7) -> NormalElement:
    if path.fiber is not NORMAL:
        raise PreconditionError("covariant_derivative_normal needs a path in the normal bundle")
    return covariant_derivative(path, t, h, tol)


def covariant_derivative_skew(path: FiberPath, t: float, h: float = 1e-3, tol: float = 1e-7) -> SkewElement:
    if path.fiber is not SKEW:
        raise PreconditionError("covariant_derivative_skew needs a path in the skew bundle")
    return covariant_derivative(path, t, h, tol)


class ParallelTransport:
    """Projected explicit-midpoint integration of D/dt x = 0 with step doubling."""

    def __init__(
        self,
        curve: Callable[[float], OrientedSubspace],
        fiber: Fiber = NORMAL,
        step: float = 1e-3,
        tol: float = 1e-8,
        max_halvings: int = 6,
        delta: float = 1e-5,
    ):
        self.curve = curve
        self.fiber = fiber
        self.step = step
        self.tol = tol
        self.max_halvings = max_halvings
        self.delta = delta

    def _projector_velocity(self, t: float) -> np.ndarray:
        ahead = self.curve(t + self.delta).projector
        behind = self.curve(t - self.delta).projector
        return (ahead - behind) / (2.0 * self.delta)

    def _rate(self, t: float, x: np.ndarray) -> np.ndarray:
        return self.fiber.transport_rate(self._projector_velocity(t), x)

    def _integrate(self, x0: np.ndarray, t_end: float, steps: int) -> np.ndarray:
        h = t_end / steps
        size = self.fiber.norm(x0)
        x = x0
        for i in range(steps):
            t = i * h
            midpoint = x + 0.5 * h * self._rate(t, x)
            x = x + h * self._rate(t + 0.5 * h, midpoint)
            x = self.fiber.project(self.curve(t + h).projector, x)
            if size > 0:
                x = x * (size / self.fiber.norm(x))
        return x

    def __call__(self, x0: np.ndarray, t_end: float) -> BundleElement:
        x0 = np.asarray(x0, dtype=float)
        self.fiber.check(self.curve(0.0), x0)
        if t_end == 0.0:
            return self.fiber.element(self.curve(0.0), x0)

        steps = max(1, int(np.ceil(abs(t_end) / self.step)))
        coarse = self._integrate(x0, t_end, steps)
        for _ in range(self.max_halvings + 1):
            steps *= 2
            fine = self._integrate(x0, t_end, steps)
            gap = self.fiber.norm(fine - coarse)
            if gap <= self.tol:
                # One Richardson step on the second-order scheme.
                x = self.fiber.project(self.curve(t_end).projector, fine + (fine - coarse) / 3.0)
                size = self.fiber.norm(x0)
                if size > 0:
                    x = x * (size / self.fiber.norm(x))
                return self.fiber.element(self.curve(t_end), x)
            logger.debug("transport step %.3g: gap %.2e above %.1e, halving", abs(t_end) / steps, gap, self.tol)
            coarse = fine
        raise TransportError(
            f"parallel transport did not reach tolerance {self.tol:g} after {self.max_halvings} halvings"
        )


def parallel_transport_normal(
    curve: Callable[[float], OrientedSubspace],
    x0: np.ndarray,
    t_end: float,
    step: float = 1e-3,
    tol: float = 1e-8,
    max_halvings: int = 6,
) -> NormalElement:
    return ParallelTransport(curve, NORMAL, step, tol, max_halvings)(x0, t_end)


def phi(point: OrientedSubspace) -> OrientedSubspace:
    """G(2,7) → G(3,8): u∧v ↦ e₀∧u∧v with ℝ⁷ = Im 𝕆."""
    if (point.k, point.n) != (2, 7):
        raise PreconditionError("phi is defined on G(2,7)")
    frame = np.hstack([np.eye(8)[:, :1], embed_imaginary(point.frame)])
    return OrientedSubspace(frame)


def bundle_morphism_phi(element: NormalElement) -> NormalElement:
    """Φ(u∧v, x) = (e₀∧u∧v, x) over φ."""
    return NormalElement(phi(element.base), embed_imaginary(element.vec))
