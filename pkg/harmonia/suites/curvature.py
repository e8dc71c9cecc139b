from itertools import product

from ..analysis.closed_forms import j_cases, r_sign, sigma3_cases
from ..analysis.diffops import Calculus
from ..models.sections import SECTION_J, SIGMA3
from .base import Outcome, SuiteRouter
from .lemmas import register_families

router = SuiteRouter("curvature")

register_families(router, sigma3_cases, ("curvature",), "checked")
register_families(router, j_cases, ("curvature",), "checked")


def _antisymmetry(section, settings) -> Outcome:
    calculus = Calculus.from_settings(settings, method="jet")
    grassmannian = section.grassmannian
    labels = list(grassmannian.indices())
    worst = 0.0
    for (k, i), (ell, j) in product(labels, labels):
        forward = calculus.curvature(section, i, k, j, ell)
        backward = calculus.curvature(section, j, ell, i, k)
        worst = max(worst, section.fiber.norm(forward + backward))
    return Outcome(f"{len(labels) ** 2} direction pairs", worst, worst, 1e-6)


@router.check("sigma3.curvature.antisymmetry", anchor="R_{X,Y}σ₃ = −R_{Y,X}σ₃", provenance="trivial")
def sigma3_antisymmetry(settings):
    return _antisymmetry(SIGMA3, settings)


@router.check("J.curvature.antisymmetry", anchor="R_{X,Y}𝔍 = −R_{Y,X}𝔍", provenance="trivial")
def j_antisymmetry(settings):
    return _antisymmetry(SECTION_J, settings)


@router.check("sigma3.curvature.r_sign", anchor="e_k∧e_ℓ∧e_m = r_{k,ℓ}e₀∧e₁∧e₂, r_{ℓ,k} = −r_{k,ℓ}")
def r_sign_antisymmetry(settings):
    pairs = [(k, ell) for k, ell in product(range(3), repeat=2) if k != ell]
    bad = 0
    for k, ell in pairs:
        cyclic = 1 if (ell - k) % 3 == 1 else -1
        bad += r_sign(k, ell) != cyclic
        bad += r_sign(ell, k) != -r_sign(k, ell)
    return Outcome(f"{len(pairs)} ordered slot pairs", float(bad), float(bad), 0.0)
