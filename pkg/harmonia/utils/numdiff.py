"""Central differences with Richardson extrapolation.

All functions differentiate at the origin of their argument; callers shift.
"""

import logging
from typing import Callable

import numpy as np

from ..errors import DifferentiationError

logger = logging.getLogger(__name__)

MAX_HALVINGS = 4


def _accept(r1: np.ndarray, r2: np.ndarray, tol: float) -> bool:
    scale = max(1.0, float(np.max(np.abs(r2), initial=0.0)))
    return float(np.max(np.abs(r1 - r2), initial=0.0)) <= tol * scale


def _extrapolate(stencil: Callable[[float], np.ndarray], h: float, tol: float, what: str) -> np.ndarray:
    step = h
    for _ in range(MAX_HALVINGS + 1):
        d1, d2, d4 = stencil(step), stencil(step / 2), stencil(step / 4)
        r1 = (4.0 * d2 - d1) / 3.0
        r2 = (4.0 * d4 - d2) / 3.0
        if _accept(r1, r2, tol):
            return (16.0 * r2 - r1) / 15.0
        logger.debug("%s: extrapolants disagree at h=%.3g, halving", what, step)
        step /= 2
    raise DifferentiationError(
        f"{what}: Richardson extrapolants still differ by more than {tol:g} at h={step * 2:.3g}"
    )


def derivative(f: Callable[[float], np.ndarray], h: float = 1e-3, tol: float = 1e-7) -> np.ndarray:
    """f'(0) for an array-valued f."""

    def central(step: float) -> np.ndarray:
        return (np.asarray(f(step)) - np.asarray(f(-step))) / (2.0 * step)

    return _extrapolate(central, h, tol, "first derivative")


def mixed_derivative(f: Callable[[float, float], np.ndarray], h: float = 1e-3, tol: float = 1e-7) -> np.ndarray:
    """∂²f/∂t∂s at (0, 0)."""

    def central(step: float) -> np.ndarray:
        return (
            np.asarray(f(step, step))
            - np.asarray(f(step, -step))
            - np.asarray(f(-step, step))
            + np.asarray(f(-step, -step))
        ) / (4.0 * step * step)

    return _extrapolate(central, h, tol, "mixed derivative")
