"""Small dense linear algebra helpers shared by the geometry models."""

import numpy as np
from scipy.linalg import null_space

from ..errors import PreconditionError


def outer(i: int, j: int, n: int) -> np.ndarray:
    """Matrix unit e_i ⊗ e^j."""
    m = np.zeros((n, n))
    m[i, j] = 1.0
    return m


def skew_unit(i: int, j: int, n: int = 8) -> np.ndarray:
    """A^{i,j} = e_i ⊗ e^j − e_j ⊗ e^i."""
    return outer(i, j, n) - outer(j, i, n)


def sym_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """A ⊙ B = AB + BA."""
    return a @ b + b @ a


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def is_skew(m: np.ndarray, tol: float = 1e-12) -> bool:
    return bool(np.max(np.abs(m + m.T), initial=0.0) <= tol)


def require_skew(m: np.ndarray, tol: float = 1e-12) -> None:
    if m.ndim != 2 or m.shape[0] != m.shape[1] or not is_skew(m, tol):
        raise PreconditionError("expected a square skew-symmetric matrix")


def orthonormalize(frame: np.ndarray) -> np.ndarray:
    """QR with a positive diagonal: same oriented span, orthonormal columns."""
    q, r = np.linalg.qr(frame)
    signs = np.sign(np.diag(r))
    signs[signs == 0] = 1.0
    return q * signs


def complete_frame(frame: np.ndarray) -> np.ndarray:
    """Extend an orthonormal n×k frame to g ∈ SO(n) with g[:, :k] = frame."""
    n, k = frame.shape
    if np.allclose(frame, np.eye(n)[:, :k], atol=0.0, rtol=0.0):
        return np.eye(n)
    complement = null_space(frame.T)
    g = np.hstack([frame, complement])
    if np.linalg.det(g) < 0:
        g[:, -1] = -g[:, -1]
    return g


def rotation_exponential(z: np.ndarray, t: float) -> np.ndarray:
    """exp(tZ) for a skew Z with Z³ = −Z (a unit plane rotation generator)."""
    n = z.shape[0]
    return np.eye(n) + np.sin(t) * z + (1.0 - np.cos(t)) * (z @ z)


def is_plane_generator(z: np.ndarray, tol: float = 1e-12) -> bool:
    return bool(np.max(np.abs(z @ z @ z + z), initial=0.0) <= tol)
