"""Closed-form covariant derivatives of σ₃ and 𝔍 at the canonical base point.

Each case pairs a derivative (first, second along a geodesic surface, or
curvature) with its value computed by hand. Slot indices ℓ are taken mod 3
for σ₃ on G(3,8) and mod 2 for 𝔍 on G(2,8).
"""

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Literal, Optional

import numpy as np

from ..models.octonion import cross3
from ..models.sections import SECTION_J, SIGMA3, Section, j_pair
from ..utils.linalg import commutator, outer, skew_unit, sym_product
from .diffops import Calculus

Kind = Literal["nabla", "second", "curvature"]

_E8 = np.eye(8)


@dataclass(frozen=True)
class LemmaCase:
    identity: str
    kind: Kind
    section: Section
    i: Optional[int]
    k: Optional[int]
    j: int
    ell: int
    expected: np.ndarray

    def compute(self, calculus: Calculus) -> np.ndarray:
        grassmannian = self.section.grassmannian
        if self.kind == "nabla":
            v = grassmannian.basis_tangent(self.ell, self.j)
            return calculus.nabla(self.section, grassmannian.base, v)
        if self.kind == "second":
            return calculus.second_nabla(self.section, grassmannian.surface(self.i, self.k, self.j, self.ell))
        return calculus.curvature(self.section, self.i, self.k, self.j, self.ell)

    def residual(self, computed: np.ndarray) -> float:
        return self.section.fiber.norm(computed - self.expected)


def delta(a: int, b: int) -> float:
    return 1.0 if a == b else 0.0


def third_slot(k: int, ell: int) -> int:
    """m with {k, ℓ, m} = {0, 1, 2}."""
    return 3 - k - ell


def r_sign(k: int, ell: int) -> int:
    """r_{k,ℓ} with e_k∧e_ℓ∧e_m = r_{k,ℓ}·e₀∧e₁∧e₂."""
    m = third_slot(k, ell)
    return int(round(np.linalg.det(np.eye(3)[[k, ell, m]])))


# σ₃ on G(3,8)


def sigma3_nabla(ell: int, j: int) -> np.ndarray:
    """∇_{e_j^ℓ}σ₃ = X(e_j, e_{ℓ+1}, e_{ℓ+2}) + δ_{j3}e_ℓ."""
    return cross3(_E8[j], _E8[(ell + 1) % 3], _E8[(ell + 2) % 3]) + delta(j, 3) * _E8[ell]


def sigma3_second_same_direction(j: int) -> np.ndarray:
    """∇_{e_j^ℓ}∇_{E_j^ℓ}σ₃ = (δ_{j3} − 1)e₃."""
    return (delta(j, 3) - 1.0) * _E8[3]


def sigma3_second_same_slot(i: int, j: int) -> np.ndarray:
    """∇_{e_i^ℓ}∇_{E_j^ℓ}σ₃ = δ_{j3}e_i for i ≠ j."""
    return delta(j, 3) * _E8[i]


def sigma3_second_cross_slot(i: int, k: int, j: int, ell: int) -> np.ndarray:
    """r_{k,ℓ}(id − e_k⊗e^k − e_ℓ⊗e^ℓ)X(e_i, e_j, e_m) for k ≠ ℓ."""
    m = third_slot(k, ell)
    trimmed = np.eye(8) - outer(k, k, 8) - outer(ell, ell, 8)
    return r_sign(k, ell) * trimmed @ cross3(_E8[i], _E8[j], _E8[m])


def sigma3_curvature(i: int, k: int, j: int, ell: int) -> np.ndarray:
    """δ_{i3}e_j − δ_{j3}e_i when k = ℓ, zero otherwise."""
    if k != ell:
        return np.zeros(8)
    return delta(i, 3) * _E8[j] - delta(j, 3) * _E8[i]


def sigma3_cases() -> Iterator[LemmaCase]:
    section = SIGMA3
    normals = range(3, 8)
    for ell, j in product(range(3), normals):
        yield LemmaCase("sigma3.nabla", "nabla", section, None, None, j, ell, sigma3_nabla(ell, j))
    for ell, j in product(range(3), normals):
        yield LemmaCase(
            "sigma3.second.same_direction", "second", section, j, ell, j, ell, sigma3_second_same_direction(j)
        )
    for ell, i, j in product(range(3), normals, normals):
        if i != j:
            yield LemmaCase(
                "sigma3.second.same_slot", "second", section, i, ell, j, ell, sigma3_second_same_slot(i, j)
            )
    for k, ell, i, j in product(range(3), range(3), normals, normals):
        if k != ell:
            yield LemmaCase(
                "sigma3.second.cross_slot", "second", section, i, k, j, ell, sigma3_second_cross_slot(i, k, j, ell)
            )
    for k, ell, i, j in product(range(3), range(3), normals, normals):
        identity = "sigma3.curvature.same_slot" if k == ell else "sigma3.curvature.cross_slot"
        yield LemmaCase(identity, "curvature", section, i, k, j, ell, sigma3_curvature(i, k, j, ell))


# 𝔍 on G(2,8)

J01 = j_pair(0, 1)


def j_nabla(ell: int, j: int) -> np.ndarray:
    """(−1)^ℓ(J_{e_j∧e_{ℓ+1}} − (e_ℓ⊗e^ℓ)⊙J_{e_j∧e_{ℓ+1}})."""
    jj = j_pair(j, (ell + 1) % 2)
    return (-1) ** ell * (jj - sym_product(outer(ell, ell, 8), jj))


def j_second_same_direction(j: int) -> np.ndarray:
    """−J_{e₀∧e₁} + (e_j⊗e^j)⊙J_{e₀∧e₁}."""
    return -J01 + sym_product(outer(j, j, 8), J01)


def j_second_same_slot(i: int, j: int) -> np.ndarray:
    """(e_i⊗e^j)J_{e₀∧e₁} + J_{e₀∧e₁}(e_j⊗e^i) for i ≠ j."""
    return outer(i, j, 8) @ J01 + J01 @ outer(j, i, 8)


def j_second_cross_slot(i: int, j: int, ell: int) -> np.ndarray:
    """∇_{e_i^{ℓ+1}}∇_{E_j^ℓ}𝔍 = (−1)^{ℓ+1}π₀∘J_{e_i∧e_j}∘π₀."""
    pi0 = np.diag([0.0, 0.0] + [1.0] * 6)
    return (-1) ** (ell + 1) * pi0 @ j_pair(i, j) @ pi0


def j_curvature(i: int, k: int, j: int, ell: int) -> np.ndarray:
    """[J_{e₀∧e₁}, A^{i,j}] when k = ℓ, zero otherwise."""
    if k != ell:
        return np.zeros((8, 8))
    return commutator(J01, skew_unit(i, j, 8))


def j_cases() -> Iterator[LemmaCase]:
    section = SECTION_J
    normals = range(2, 8)
    for ell, j in product(range(2), normals):
        yield LemmaCase("J.nabla", "nabla", section, None, None, j, ell, j_nabla(ell, j))
    for ell, j in product(range(2), normals):
        yield LemmaCase("J.second.same_direction", "second", section, j, ell, j, ell, j_second_same_direction(j))
    for ell, i, j in product(range(2), normals, normals):
        if i != j:
            yield LemmaCase("J.second.same_slot", "second", section, i, ell, j, ell, j_second_same_slot(i, j))
    for ell, i, j in product(range(2), normals, normals):
        yield LemmaCase(
            "J.second.cross_slot", "second", section, i, (ell + 1) % 2, j, ell, j_second_cross_slot(i, j, ell)
        )
    for k, ell, i, j in product(range(2), range(2), normals, normals):
        identity = "J.curvature.same_slot" if k == ell else "J.curvature.cross_slot"
        yield LemmaCase(identity, "curvature", section, i, k, j, ell, j_curvature(i, k, j, ell))


def all_cases() -> Iterator[LemmaCase]:
    yield from sigma3_cases()
    yield from j_cases()
