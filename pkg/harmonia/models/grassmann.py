"""Oriented Grassmannians G(k, n) with the normal homogeneous metric.

Points are column-orthonormal n×k frames; tangent vectors at a point P are
skew n×n matrices in the Cartan complement 𝔪_P, acting on frames from the
left. At the canonical base point e₀∧…∧e_{k−1} the tangent basis is

    e_j^ℓ = e_j ⊗ e^ℓ − e_ℓ ⊗ e^j,    0 ≤ ℓ < k ≤ j < n,

orthonormal for ⟨A, B⟩ = ½·tr(AᵀB). At any other point P the basis is
transported by an isometry g ∈ SO(n) with g·base = P.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Optional, Union

import numpy as np
from scipy.linalg import expm

from ..errors import PreconditionError
from ..utils.linalg import (
    complete_frame,
    is_plane_generator,
    is_skew,
    orthonormalize,
    rotation_exponential,
    skew_unit,
)

logger = logging.getLogger(__name__)

ORTHONORMAL_TOL = 1e-10
POINT_TOL = 1e-9
DRIFT_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class OrientedSubspace:
    frame: np.ndarray

    def __post_init__(self):
        frame = np.array(self.frame, dtype=float)
        if frame.ndim != 2 or frame.shape[1] > frame.shape[0]:
            raise PreconditionError(f"frame must be n×k with k ≤ n, got shape {frame.shape}")
        gram = frame.T @ frame
        residual = float(np.max(np.abs(gram - np.eye(frame.shape[1])), initial=0.0))
        if residual > ORTHONORMAL_TOL:
            raise PreconditionError(f"frame columns are not orthonormal (residual {residual:.2e})")
        frame.setflags(write=False)
        object.__setattr__(self, "frame", frame)

    @classmethod
    def canonical(cls, k: int, n: int) -> "OrientedSubspace":
        return cls(np.eye(n)[:, :k])

    @property
    def n(self) -> int:
        return self.frame.shape[0]

    @property
    def k(self) -> int:
        return self.frame.shape[1]

    @cached_property
    def plane_projector(self) -> np.ndarray:
        """F·Fᵀ, the orthogonal projection onto P."""
        return self.frame @ self.frame.T

    @cached_property
    def projector(self) -> np.ndarray:
        """π_P = I − F·Fᵀ, the orthogonal projection onto P^⊥."""
        return np.eye(self.n) - self.plane_projector

    def is_canonical(self) -> bool:
        return bool(np.array_equal(self.frame, np.eye(self.n)[:, : self.k]))

    def isometry(self) -> np.ndarray:
        """g ∈ SO(n) whose first k columns are this frame, so g·base = P."""
        return complete_frame(self.frame)

    def rotated(self, r: np.ndarray) -> "OrientedSubspace":
        """Same point when r ∈ SO(k): the frame F·r."""
        return OrientedSubspace(self.frame @ r)

    def __eq__(self, other) -> bool:
        if not isinstance(other, OrientedSubspace):
            return NotImplemented
        if self.frame.shape != other.frame.shape:
            return False
        if np.linalg.norm(self.plane_projector - other.plane_projector) >= POINT_TOL:
            return False
        return bool(np.linalg.det(self.frame.T @ other.frame) > 0)

    __hash__ = None

    def __repr__(self) -> str:
        return f"OrientedSubspace(k={self.k}, n={self.n})"


def projector(point: OrientedSubspace) -> np.ndarray:
    return point.projector


@dataclass(frozen=True, eq=False)
class TangentVector:
    base: OrientedSubspace
    mat: np.ndarray

    def __post_init__(self):
        mat = np.array(self.mat, dtype=float)
        n = self.base.n
        if mat.shape != (n, n) or not is_skew(mat, tol=ORTHONORMAL_TOL):
            raise PreconditionError("tangent vector must be a skew n×n matrix")
        frame = self.base.frame
        pi = self.base.projector
        if np.max(np.abs(frame.T @ mat @ frame), initial=0.0) > ORTHONORMAL_TOL or (
            np.max(np.abs(pi @ mat @ pi), initial=0.0) > ORTHONORMAL_TOL
        ):
            raise PreconditionError("tangent vector must lie in the Cartan complement at its base")
        mat.setflags(write=False)
        object.__setattr__(self, "mat", mat)

    def inner(self, other: "TangentVector") -> float:
        return metric(self.mat, other.mat)

    def norm(self) -> float:
        return float(np.sqrt(self.inner(self)))

    def __add__(self, other: "TangentVector") -> "TangentVector":
        return TangentVector(self.base, self.mat + other.mat)

    def __mul__(self, scalar: float) -> "TangentVector":
        return TangentVector(self.base, scalar * self.mat)

    __rmul__ = __mul__


def metric(a: np.ndarray, b: np.ndarray) -> float:
    """⟨A, B⟩ = ½·tr(AᵀB) on 𝔪."""
    return 0.5 * float(np.sum(a * b))


def _drifted(frame: np.ndarray) -> bool:
    gram = frame.T @ frame
    return float(np.max(np.abs(gram - np.eye(frame.shape[1])), initial=0.0)) > DRIFT_TOL


def matrix_exponential(z: np.ndarray, t: float) -> np.ndarray:
    """exp(tZ): closed-form plane rotation for unit generators, Padé otherwise."""
    if is_plane_generator(z):
        return rotation_exponential(z, t)
    return expm(t * z)


def exp_action(z: Union[TangentVector, np.ndarray], t: float, point: OrientedSubspace) -> OrientedSubspace:
    """exp(t·Z)·P applied to every frame column."""
    mat = z.mat if isinstance(z, TangentVector) else np.asarray(z, dtype=float)
    if not is_skew(mat, tol=ORTHONORMAL_TOL):
        raise PreconditionError("exp_action needs a skew generator")
    frame = matrix_exponential(mat, t) @ point.frame
    if _drifted(frame):
        frame = orthonormalize(frame)
    return OrientedSubspace(frame)


@dataclass(frozen=True)
class GeodesicSurface:
    """P_{t,s} = exp(t·A)·exp(s·B)·P with A = e_i^k and B = e_j^ℓ transported to P."""

    indices: tuple[int, int, int, int]
    base: OrientedSubspace
    first: np.ndarray
    second: np.ndarray

    def __call__(self, t: float, s: float) -> OrientedSubspace:
        return OrientedSubspace(self.frame(t, s))

    def frame(self, t: float, s: float) -> np.ndarray:
        frame = matrix_exponential(self.first, t) @ matrix_exponential(self.second, s) @ self.base.frame
        return orthonormalize(frame) if _drifted(frame) else frame

    def frame_jet(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(∂_t F, ∂_s F, ∂²_{ts} F) at (0, 0)."""
        f = self.base.frame
        return self.first @ f, self.second @ f, self.first @ self.second @ f

    def projector_derivative(self) -> np.ndarray:
        """π₀′ = −[A, F·Fᵀ], the t-derivative of the projector at (0, 0)."""
        plane = self.base.plane_projector
        return -(self.first @ plane - plane @ self.first)


@dataclass(frozen=True)
class Grassmannian:
    k: int
    n: int

    def __post_init__(self):
        if not 0 < self.k < self.n:
            raise PreconditionError(f"G(k, n) needs 0 < k < n, got k={self.k}, n={self.n}")

    @property
    def dim(self) -> int:
        return self.k * (self.n - self.k)

    @cached_property
    def base(self) -> OrientedSubspace:
        return OrientedSubspace.canonical(self.k, self.n)

    def wrap(self, ell: int) -> int:
        """Slot indices are taken mod k."""
        return ell % self.k

    def check_indices(self, ell: int, j: int) -> None:
        if not 0 <= ell < self.k or not self.k <= j < self.n:
            raise PreconditionError(
                f"need 0 ≤ ℓ < {self.k} ≤ j < {self.n}, got ℓ={ell}, j={j}"
            )

    def indices(self) -> Iterator[tuple[int, int]]:
        """Basis labels (ℓ, j), ℓ-major."""
        for ell in range(self.k):
            for j in range(self.k, self.n):
                yield ell, j

    def _owns(self, point: OrientedSubspace) -> None:
        if (point.k, point.n) != (self.k, self.n):
            raise PreconditionError(f"point of G({point.k},{point.n}) used on G({self.k},{self.n})")

    def generator(self, ell: int, j: int, at: Optional[OrientedSubspace] = None) -> np.ndarray:
        """The skew matrix of e_j^ℓ, conjugated by the isometry onto ``at``."""
        self.check_indices(ell, j)
        unit = skew_unit(j, ell, self.n)
        if at is None or at.is_canonical():
            return unit
        self._owns(at)
        g = at.isometry()
        return g @ unit @ g.T

    def basis_tangent(self, ell: int, j: int, at: Optional[OrientedSubspace] = None) -> TangentVector:
        return TangentVector(at if at is not None else self.base, self.generator(ell, j, at))

    def tangent_basis(self, at: Optional[OrientedSubspace] = None) -> list[TangentVector]:
        return [self.basis_tangent(ell, j, at) for ell, j in self.indices()]

    def geodesic(self, ell: int, j: int, t: float) -> OrientedSubspace:
        """γ_j^ℓ(t): column ℓ of the base frame replaced by cos t·e_ℓ + sin t·e_j."""
        self.check_indices(ell, j)
        frame = np.eye(self.n)[:, : self.k].copy()
        frame[ell, ell] = np.cos(t)
        frame[j, ell] = np.sin(t)
        return OrientedSubspace(frame)

    def surface(
        self, i: int, k: int, j: int, ell: int, at: Optional[OrientedSubspace] = None
    ) -> GeodesicSurface:
        """exp(t·e_i^k)·γ_j^ℓ(s), slot indices taken mod k."""
        k, ell = self.wrap(k), self.wrap(ell)
        point = at if at is not None else self.base
        return GeodesicSurface(
            indices=(i, k, j, ell),
            base=point,
            first=self.generator(k, i, point),
            second=self.generator(ell, j, point),
        )

    def coordinates(self, v: TangentVector) -> np.ndarray:
        """Components of v in the transported basis at its base point."""
        return np.array([metric(v.mat, self.generator(ell, j, v.base)) for ell, j in self.indices()])

    def random_point(self, rng: Union[np.random.Generator, int, None] = None) -> OrientedSubspace:
        return random_point(self.n, self.k, rng)


def random_point(n: int, k: int, rng: Union[np.random.Generator, int, None] = None) -> OrientedSubspace:
    """Orthonormalized Gaussian n×k draw; invariant measure on G(k, n)."""
    if not 0 < k < n:
        raise PreconditionError(f"random_point needs 0 < k < n, got k={k}, n={n}")
    if not isinstance(rng, np.random.Generator):
        rng = np.random.default_rng(rng)
    while True:
        draw = rng.standard_normal((n, k))
        if np.linalg.matrix_rank(draw) == k:
            return OrientedSubspace(orthonormalize(draw))
        logger.debug("degenerate Gaussian frame, redrawing")
