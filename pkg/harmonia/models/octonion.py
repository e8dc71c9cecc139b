"""Octonion arithmetic over ℝ⁸ and the double/triple cross products.

The basis is e₀ (unit), e₁ … e₇. Products of imaginary units follow

    e_i e_j = −δ_ij e₀ + ε_ijk e_k

with ε totally antisymmetric and +1 on the triples in ``POSITIVE_TRIPLES``.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Union

import numpy as np

from ..errors import PreconditionError

POSITIVE_TRIPLES = ((1, 2, 3), (1, 4, 5), (1, 7, 6), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 6, 5))


def _permutation_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    perm = list(perm)
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            sign = -sign
    return sign


def _build_epsilon() -> np.ndarray:
    eps = np.zeros((7, 7, 7), dtype=np.int8)
    for triple in POSITIVE_TRIPLES:
        for perm in permutations(range(3)):
            i, j, k = (triple[p] - 1 for p in perm)
            eps[i, j, k] = _permutation_sign(perm)
    eps.setflags(write=False)
    return eps


# Indexed 0..6 for e₁..e₇; use ``epsilon`` for 1-based access.
EPSILON = _build_epsilon()


def epsilon(i: int, j: int, k: int) -> int:
    """ε_ijk for 1 ≤ i, j, k ≤ 7."""
    if not all(1 <= idx <= 7 for idx in (i, j, k)):
        raise PreconditionError(f"epsilon indices must lie in 1..7, got {(i, j, k)}")
    return int(EPSILON[i - 1, j - 1, k - 1])


def epsilon_entries() -> list[tuple[int, int, int, int]]:
    """All 343 entries (i, j, k, ε_ijk) in lexicographic order."""
    return [(i, j, k, epsilon(i, j, k)) for i, j, k in product(range(1, 8), repeat=3)]


def _build_structure_constants() -> np.ndarray:
    # MULT[i, j] is the coefficient vector of e_i e_j.
    mult = np.zeros((8, 8, 8))
    for i in range(8):
        mult[0, i, i] = 1.0
        mult[i, 0, i] = 1.0
    for i in range(1, 8):
        for j in range(1, 8):
            if i == j:
                mult[i, j, 0] = -1.0
            else:
                mult[i, j, 1:] = EPSILON[i - 1, j - 1, :]
    mult.setflags(write=False)
    return mult


MULT = _build_structure_constants()

OctonionLike = Union["Octonion", np.ndarray, list, tuple]


def _coeffs(a: OctonionLike) -> np.ndarray:
    if isinstance(a, Octonion):
        return a.coeffs
    arr = np.asarray(a, dtype=float)
    if arr.shape != (8,):
        raise PreconditionError(f"octonion needs 8 coefficients, got shape {arr.shape}")
    return arr


def basis(i: int) -> np.ndarray:
    if not 0 <= i <= 7:
        raise PreconditionError(f"octonion basis index must lie in 0..7, got {i}")
    e = np.zeros(8)
    e[i] = 1.0
    return e


def mul(a: OctonionLike, b: OctonionLike) -> np.ndarray:
    return np.einsum("i,j,ijk->k", _coeffs(a), _coeffs(b), MULT)


def conj(a: OctonionLike) -> np.ndarray:
    c = _coeffs(a).copy()
    c[1:] = -c[1:]
    return c


def inner(a: OctonionLike, b: OctonionLike) -> float:
    return float(np.dot(_coeffs(a), _coeffs(b)))


def norm(a: OctonionLike) -> float:
    return float(np.linalg.norm(_coeffs(a)))


def cross2(u: OctonionLike, v: OctonionLike) -> np.ndarray:
    """Double cross product u × v = uv + ⟨u, v⟩ on Im 𝕆."""
    u, v = _coeffs(u), _coeffs(v)
    if u[0] != 0.0 or v[0] != 0.0:
        raise PreconditionError("cross2 is defined on imaginary octonions only")
    result = mul(u, v)
    result[0] += inner(u, v)
    return result


def cross3(u: OctonionLike, v: OctonionLike, w: OctonionLike) -> np.ndarray:
    """Triple cross product −u(v̄w) + ⟨u,v⟩w + ⟨v,w⟩u − ⟨w,u⟩v."""
    u, v, w = _coeffs(u), _coeffs(v), _coeffs(w)
    return -mul(u, mul(conj(v), w)) + inner(u, v) * w + inner(v, w) * u - inner(w, u) * v


@lru_cache(maxsize=None)
def cross2_tensor() -> np.ndarray:
    """C2[a, b, c] with (u × v)_c = Σ u_a v_b C2[a, b, c] on ℝ⁷ = Im 𝕆."""
    tensor = np.zeros((7, 7, 7))
    for a in range(7):
        for b in range(7):
            tensor[a, b] = cross2(basis(a + 1), basis(b + 1))[1:]
    tensor.setflags(write=False)
    return tensor


@lru_cache(maxsize=None)
def cross3_tensor() -> np.ndarray:
    """C3[a, b, c, d] with X(u, v, w)_d = Σ u_a v_b w_c C3[a, b, c, d]."""
    tensor = np.zeros((8, 8, 8, 8))
    for a, b, c in product(range(8), repeat=3):
        tensor[a, b, c] = cross3(basis(a), basis(b), basis(c))
    tensor.setflags(write=False)
    return tensor


def embed_imaginary(x: np.ndarray) -> np.ndarray:
    """ℝ⁷ → Im 𝕆 ⊂ ℝ⁸ on coordinates 1..7; works column-wise on matrices."""
    x = np.asarray(x, dtype=float)
    pad = np.zeros((1,) + x.shape[1:])
    return np.concatenate([pad, x], axis=0)


@dataclass(frozen=True, eq=False)
class Octonion:
    coeffs: np.ndarray

    def __post_init__(self):
        arr = np.array(self.coeffs, dtype=float)
        if arr.shape != (8,):
            raise PreconditionError(f"octonion needs 8 coefficients, got shape {arr.shape}")
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    @classmethod
    def unit(cls, i: int) -> "Octonion":
        return cls(basis(i))

    @property
    def real(self) -> float:
        return float(self.coeffs[0])

    @property
    def imag(self) -> np.ndarray:
        return self.coeffs[1:]

    def __add__(self, other: "Octonion") -> "Octonion":
        return Octonion(self.coeffs + _coeffs(other))

    def __sub__(self, other: "Octonion") -> "Octonion":
        return Octonion(self.coeffs - _coeffs(other))

    def __neg__(self) -> "Octonion":
        return Octonion(-self.coeffs)

    def __mul__(self, other):
        if np.isscalar(other):
            return Octonion(self.coeffs * other)
        return Octonion(mul(self, other))

    def __rmul__(self, other):
        if np.isscalar(other):
            return Octonion(self.coeffs * other)
        return Octonion(mul(other, self))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Octonion):
            return NotImplemented
        return bool(np.array_equal(self.coeffs, other.coeffs))

    def __hash__(self) -> int:
        return hash(self.coeffs.tobytes())

    def conj(self) -> "Octonion":
        return Octonion(conj(self))

    def norm(self) -> float:
        return norm(self)

    def __repr__(self) -> str:
        terms = [f"{c:+g}e{i}" for i, c in enumerate(self.coeffs) if c != 0.0]
        return f"Octonion({' '.join(terms) or '0'})"
