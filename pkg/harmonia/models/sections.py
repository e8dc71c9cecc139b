"""Distinguished unit sections built from cross products.

Every section here is a multilinear form in the frame columns, alternating
where k > 1, so its value depends only on the oriented subspace. The form is
kept on the section so derivatives along frame curves follow from the
product rule.
"""

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from ..errors import PreconditionError
from .bundles import NORMAL, SKEW, BundleElement, Fiber
from .grassmann import Grassmannian, OrientedSubspace
from .octonion import cross2_tensor, cross3_tensor

Form = Callable[..., np.ndarray]


@dataclass(frozen=True)
class Section:
    name: str
    k: int
    n: int
    fiber: Fiber
    evaluate: Callable[[np.ndarray], np.ndarray] = field(repr=False)
    form: Optional[Form] = field(default=None, repr=False)

    @property
    def grassmannian(self) -> Grassmannian:
        return Grassmannian(self.k, self.n)

    def value(self, point: OrientedSubspace) -> np.ndarray:
        if (point.k, point.n) != (self.k, self.n):
            raise PreconditionError(f"{self.name} lives on G({self.k},{self.n}), got a point of G({point.k},{point.n})")
        return self.evaluate(point.frame)

    def __call__(self, point: OrientedSubspace) -> BundleElement:
        return self.fiber.element(point, self.value(point))

    @property
    def is_multilinear(self) -> bool:
        return self.form is not None


def multilinear_section(name: str, k: int, n: int, fiber: Fiber, form: Form) -> Section:
    return Section(name, k, n, fiber, evaluate=lambda frame: form(*frame.T), form=form)


def sigma2_form(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    return np.einsum("a,b,abc->c", u, v, cross2_tensor())


def sigma3_form(u: np.ndarray, v: np.ndarray, w: np.ndarray) -> np.ndarray:
    return np.einsum("a,b,c,abcd->d", u, v, w, cross3_tensor())


def j_form(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Matrix of w ↦ X(u, v, w)."""
    return np.einsum("a,b,abcd->dc", u, v, cross3_tensor())


def acs6_form(u: np.ndarray) -> np.ndarray:
    """Matrix of v ↦ u × v on ℝ⁷."""
    return np.einsum("a,acd->dc", u, cross2_tensor())


def standard_complex_structure(n: int) -> np.ndarray:
    """J_std on ℝⁿ pairing (e_{2i}, e_{2i+1}): e_{2i} ↦ e_{2i+1}."""
    if n % 2:
        raise PreconditionError(f"complex structure needs even dimension, got {n}")
    j = np.zeros((n, n))
    for i in range(0, n, 2):
        j[i + 1, i] = 1.0
        j[i, i + 1] = -1.0
    return j


SIGMA2 = multilinear_section("sigma2", 2, 7, NORMAL, sigma2_form)
SIGMA3 = multilinear_section("sigma3", 3, 8, NORMAL, sigma3_form)
SECTION_J = multilinear_section("J", 2, 8, SKEW, j_form)
ACS6 = multilinear_section("acs6", 1, 7, SKEW, acs6_form)


def hopf_section(m: int = 2) -> Section:
    if m < 1:
        raise PreconditionError(f"Hopf field needs m ≥ 1, got {m}")
    j_std = standard_complex_structure(2 * m)
    return multilinear_section("hopf", 1, 2 * m, NORMAL, lambda p: j_std @ p)


def get_section(name: str, hopf_m: int = 2) -> Section:
    sections = {"sigma2": SIGMA2, "sigma3": SIGMA3, "J": SECTION_J, "acs6": ACS6}
    if name == "hopf":
        return hopf_section(hopf_m)
    try:
        return sections[name]
    except KeyError:
        raise PreconditionError(f"unknown section {name!r}") from None


SECTION_NAMES = ("sigma2", "sigma3", "J", "hopf", "acs6")


def sigma2(point: OrientedSubspace) -> BundleElement:
    return SIGMA2(point)


def sigma3(point: OrientedSubspace) -> BundleElement:
    return SIGMA3(point)


def section_j(point: OrientedSubspace) -> BundleElement:
    return SECTION_J(point)


def j_pair(i: int, j: int) -> np.ndarray:
    """J_{e_i∧e_j} as a matrix; e_i, e_j need not be distinct."""
    return j_form(np.eye(8)[i], np.eye(8)[j])


def hopf(p: np.ndarray, m: Optional[int] = None) -> BundleElement:
    p = np.asarray(p, dtype=float)
    if abs(np.linalg.norm(p) - 1.0) > 1e-12:
        raise PreconditionError("hopf needs a unit vector")
    section = hopf_section(m if m is not None else p.shape[0] // 2)
    return section(OrientedSubspace(p[:, None]))


def acs6(u: np.ndarray) -> BundleElement:
    u = np.asarray(u, dtype=float)
    if u.shape != (7,) or abs(np.linalg.norm(u) - 1.0) > 1e-12:
        raise PreconditionError("acs6 needs a unit vector of ℝ⁷")
    return ACS6(OrientedSubspace(u[:, None]))


def pullback(section: Section, g: np.ndarray) -> Section:
    """σ^g(Q) = g⁻¹·σ(g·Q) for normal fibers, g⁻¹·σ(g·Q)·g for skew fibers."""
    gt = g.T
    if section.fiber is NORMAL:

        def evaluate(frame: np.ndarray) -> np.ndarray:
            return gt @ section.evaluate(g @ frame)

    else:

        def evaluate(frame: np.ndarray) -> np.ndarray:
            return gt @ section.evaluate(g @ frame) @ g

    form = None
    if section.form is not None:
        inner_form = section.form
        if section.fiber is NORMAL:
            form = lambda *cols: gt @ inner_form(*(g @ c for c in cols))  # noqa: E731
        else:
            form = lambda *cols: gt @ inner_form(*(g @ c for c in cols)) @ g  # noqa: E731
    return Section(f"{section.name}^g", section.k, section.n, section.fiber, evaluate, form)
