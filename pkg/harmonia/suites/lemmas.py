"""Closed-form first and second covariant derivatives at the canonical base point."""

from itertools import product

import numpy as np

from ..analysis.closed_forms import LemmaCase, j_cases, sigma3_cases
from ..analysis.diffops import Calculus
from ..models.sections import SECTION_J, SIGMA3, j_pair
from .base import EXACT_TOL, Outcome, SuiteRouter

sigma3_router = SuiteRouter("lemmas-sigma3")
j_router = SuiteRouter("lemmas-J")

FORMULAS = {
    "sigma3.nabla": "∇_{e_j^ℓ}σ₃ = X(e_j, e_{ℓ+1}, e_{ℓ+2}) + δ_{j3}e_ℓ",
    "sigma3.second.same_direction": "∇_{e_j^ℓ}∇_{E_j^ℓ}σ₃ = (δ_{j3} − 1)e₃",
    "sigma3.second.same_slot": "∇_{e_i^ℓ}∇_{E_j^ℓ}σ₃ = δ_{j3}e_i, i ≠ j",
    "sigma3.second.cross_slot": "∇_{e_i^k}∇_{E_j^ℓ}σ₃ = r_{k,ℓ}(id − e_k⊗e^k − e_ℓ⊗e^ℓ)X(e_i, e_j, e_m), k ≠ ℓ",
    "J.nabla": "∇_{e_j^ℓ}𝔍 = (−1)^ℓ(J_{e_j∧e_{ℓ+1}} − (e_ℓ⊗e^ℓ)⊙J_{e_j∧e_{ℓ+1}})",
    "J.second.same_direction": "∇_{e_j^ℓ}∇_{E_j^ℓ}𝔍 = −J_{e₀∧e₁} + (e_j⊗e^j)⊙J_{e₀∧e₁}",
    "J.second.same_slot": "∇_{e_i^ℓ}∇_{E_j^ℓ}𝔍 = (e_i⊗e^j)J_{e₀∧e₁} + J_{e₀∧e₁}(e_j⊗e^i), i ≠ j",
    "J.second.cross_slot": "∇_{e_i^{ℓ+1}}∇_{E_j^ℓ}𝔍 = (−1)^{ℓ+1}π₀∘J_{e_i∧e_j}∘π₀",
    "sigma3.curvature.same_slot": "R_{e_i^ℓ, e_j^ℓ}σ₃ = δ_{i3}e_j − δ_{j3}e_i",
    "sigma3.curvature.cross_slot": "R_{e_i^k, e_j^ℓ}σ₃ = 0, k ≠ ℓ",
    "J.curvature.same_slot": "R_{e_i^ℓ, e_j^ℓ}𝔍 = [J_{e₀∧e₁}, A^{i,j}]",
    "J.curvature.cross_slot": "R_{e_i^0, e_j^1}𝔍 = 0",
}


def family_outcome(cases: list[LemmaCase], calculus: Calculus, tolerance: float) -> Outcome:
    """Worst case of one identity family."""
    worst_case, worst_value, worst = None, None, -1.0
    for case in cases:
        value = case.compute(calculus)
        residual = case.residual(value)
        if residual > worst:
            worst_case, worst_value, worst = case, value, residual
    where = f"(i,k,j,ℓ)=({worst_case.i},{worst_case.k},{worst_case.j},{worst_case.ell})"
    return Outcome(
        expected=f"{len(cases)} index combinations; worst at {where}",
        computed=worst_case.section.fiber.norm(worst_value),
        residual=worst,
        tolerance=tolerance,
    )


def _families(cases, kinds) -> dict[str, list[LemmaCase]]:
    families: dict[str, list[LemmaCase]] = {}
    for case in cases:
        if case.kind in kinds:
            families.setdefault(case.identity, []).append(case)
    return families


def register_families(router: SuiteRouter, cases_factory, kinds, method: str) -> None:
    for identity in _families(cases_factory(), kinds):

        def check(settings, identity=identity):
            family = _families(cases_factory(), kinds)[identity]
            calculus = Calculus.from_settings(settings, method=method)
            return family_outcome(family, calculus, settings.closed_form_tol)

        router.check(identity, anchor=FORMULAS[identity])(check)


register_families(sigma3_router, sigma3_cases, ("nabla", "second"), "checked")
register_families(j_router, j_cases, ("nabla", "second"), "checked")


def _exact_path(cases_factory, settings) -> Outcome:
    calculus = Calculus.from_settings(settings, method="exact")
    cases = [case for case in cases_factory() if case.kind != "curvature"]
    worst = max(case.residual(case.compute(calculus)) for case in cases)
    return Outcome(f"product-rule jets on {len(cases)} cases", worst, worst, settings.closed_form_tol)


@sigma3_router.check("sigma3.exact_path", anchor="π₀(π₀′S₁ + S₂) with multilinear jets", provenance="derived")
def sigma3_exact_path(settings):
    return _exact_path(sigma3_cases, settings)


@j_router.check("J.exact_path", anchor="π₀(π₀′T₁ + T₂ + T₁π₀′)π₀ with multilinear jets", provenance="derived")
def j_exact_path(settings):
    return _exact_path(j_cases, settings)


@sigma3_router.check("sigma3.nabla.orthogonal", anchor="⟨∇σ₃, σ₃⟩ = 0", provenance="trivial")
def sigma3_unit_derivative(settings):
    calculus = Calculus.from_settings(settings, method="jet")
    grassmannian = SIGMA3.grassmannian
    sigma = SIGMA3.value(grassmannian.base)
    worst = max(
        abs(np.dot(calculus.nabla(SIGMA3, grassmannian.base, v), sigma)) for v in grassmannian.tangent_basis()
    )
    return Outcome("differentiating ‖σ₃‖² = 1", worst, worst, 1e-7)


@j_router.check("J.complex_structure", anchor="J_{e₀∧e₁}² = −id on (e₀∧e₁)^⊥, ‖J‖ = 1")
def j_complex_structure(settings):
    base = SECTION_J.grassmannian.base
    value = SECTION_J.value(base)
    square = (value @ value)[2:, 2:]
    residual = max(
        float(np.max(np.abs(square + np.eye(6)))),
        abs(SECTION_J.fiber.norm(value) - 1.0),
        float(np.max(np.abs(value @ np.eye(8)[2] - np.eye(8)[3]))),
    )
    return Outcome("orthogonal complex structure on the normal space, J(e₂) = e₃", residual, residual, EXACT_TOL)


@j_router.check("J.index_properties", anchor="e^k∘J_{e_i∧e_j} = −e^i∘J_{e_k∧e_j} = −e^j∘J_{e_i∧e_k}")
def j_index_properties(settings):
    worst = 0.0
    for i, j, k in product(range(8), repeat=3):
        row = j_pair(i, j)[k]
        worst = max(
            worst,
            float(np.max(np.abs(row + j_pair(k, j)[i]))),
            float(np.max(np.abs(row + j_pair(i, k)[j]))),
            float(np.max(np.abs(j_pair(i, j) + j_pair(j, i)))),
        )
    return Outcome("all index triples, and J_{e_i∧e_j} = −J_{e_j∧e_i}", worst, worst, EXACT_TOL)
