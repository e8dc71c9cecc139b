from itertools import combinations, permutations, product

import numpy as np

from ..models.octonion import (
    POSITIVE_TRIPLES,
    basis,
    conj,
    cross2,
    cross3,
    embed_imaginary,
    epsilon,
    inner,
    mul,
    norm,
)
from ..utils.linalg import orthonormalize
from .base import EXACT_TOL, Outcome, SuiteRouter, rng_for

router = SuiteRouter("octonion")

DRAWS = 1000


def _imaginary(rng: np.random.Generator) -> np.ndarray:
    return embed_imaginary(rng.standard_normal(7))


def _orthonormal(rng: np.random.Generator, count: int, imaginary: bool = False) -> list[np.ndarray]:
    if imaginary:
        frame = embed_imaginary(orthonormalize(rng.standard_normal((7, count))))
    else:
        frame = orthonormalize(rng.standard_normal((8, count)))
    return list(frame.T)


def _gram_det(*vectors: np.ndarray) -> float:
    m = np.array(vectors)
    return float(np.linalg.det(m @ m.T))


@router.check("octonion.epsilon.table", anchor="ε_ijk totally antisymmetric, +1 on 123 145 176 246 257 347 365")
def epsilon_table(settings):
    expected = {}
    for triple in POSITIVE_TRIPLES:
        for perm in permutations(range(3)):
            swaps = sum(1 for a, b in combinations(perm, 2) if a > b)
            expected[tuple(triple[p] for p in perm)] = -1 if swaps % 2 else 1
    mismatches = sum(
        epsilon(i, j, k) != expected.get((i, j, k), 0) for i, j, k in product(range(1, 8), repeat=3)
    )
    return Outcome(
        expected="343 entries from the seven positive triples by antisymmetry",
        computed=float(mismatches),
        residual=float(mismatches),
        tolerance=0.0,
    )


@router.check("octonion.mul.table", anchor="e_ie_j = −δ_ij e₀ + ε_ijk e_k")
def multiplication_examples(settings):
    cases = [
        (mul(basis(1), basis(2)), basis(3)),
        (mul(basis(1), basis(1)), -basis(0)),
        (mul(basis(1), basis(7)), basis(6)),
    ]
    x = rng_for(settings, 1).standard_normal(8)
    cases += [(mul(basis(0), x), x), (mul(x, basis(0)), x)]
    residual = max(float(np.max(np.abs(got - want))) for got, want in cases)
    return Outcome("e₁e₂ = e₃, e₁e₁ = −e₀, e₁e₇ = e₆, e₀ two-sided unit", residual, residual, EXACT_TOL)


@router.check("octonion.mul.norm", anchor="‖ab‖ = ‖a‖‖b‖", provenance="derived")
def norm_multiplicativity(settings):
    rng = rng_for(settings, 2)
    worst = 0.0
    for _ in range(DRAWS):
        a, b = rng.standard_normal(8), rng.standard_normal(8)
        worst = max(worst, abs(norm(mul(a, b)) - norm(a) * norm(b)) / (norm(a) * norm(b)))
    return Outcome(f"relative residual over {DRAWS} draws", worst, worst, EXACT_TOL)


@router.check("octonion.conj", anchor="a·ā = ‖a‖²e₀, conj(conj(a)) = a", provenance="trivial")
def conjugation(settings):
    rng = rng_for(settings, 3)
    worst = 0.0
    for _ in range(DRAWS):
        a = rng.standard_normal(8)
        worst = max(
            worst,
            float(np.max(np.abs(mul(a, conj(a)) - norm(a) ** 2 * basis(0)))) / norm(a) ** 2,
            float(np.max(np.abs(conj(conj(a)) - a))),
        )
    return Outcome("a·ā = ‖a‖²e₀", worst, worst, EXACT_TOL)


@router.check("octonion.alternative", anchor="uv = −vu, u(uv) = −v for orthonormal imaginary u, v")
def alternativity(settings):
    rng = rng_for(settings, 4)
    worst = 0.0
    for _ in range(DRAWS):
        u, v = _orthonormal(rng, 2, imaginary=True)
        worst = max(
            worst,
            float(np.max(np.abs(mul(u, v) + mul(v, u)))),
            float(np.max(np.abs(mul(u, mul(u, v)) + v))),
        )
    return Outcome("anticommutation and left alternativity", worst, worst, EXACT_TOL)


@router.check("octonion.conjugate_triple", anchor="−(w̄v)ū = (ūv)w̄ for orthonormal u, v, w")
def conjugate_triple(settings):
    rng = rng_for(settings, 5)
    worst = 0.0
    for _ in range(DRAWS):
        u, v, w = _orthonormal(rng, 3)
        lhs = -mul(mul(conj(w), v), conj(u))
        rhs = mul(mul(conj(u), v), conj(w))
        worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    return Outcome("identity on orthonormal triples", worst, worst, EXACT_TOL)


@router.check("octonion.cross2.axioms", anchor="u×v = uv + ⟨u,v⟩", provenance="derived")
def cross2_axioms(settings):
    rng = rng_for(settings, 6)
    worst = float(np.max(np.abs(cross2(basis(1), basis(2)) - basis(3))))
    for _ in range(DRAWS):
        u, v = _imaginary(rng), _imaginary(rng)
        x = cross2(u, v)
        scale = max(1.0, _gram_det(u, v))
        worst = max(
            worst,
            abs(x[0]),
            abs(inner(x, u)) / scale,
            abs(inner(x, v)) / scale,
            abs(inner(x, x) - _gram_det(u, v)) / scale,
            float(np.max(np.abs(cross2(v, u) + x))),
            float(np.max(np.abs(cross2(u, u)))),
        )
    return Outcome("imaginary, orthogonal to u and v, ‖u×v‖² = Gram determinant", worst, worst, EXACT_TOL)


@router.check("octonion.cross3.axioms", anchor="X(u,v,w) = −u(v̄w) + ⟨u,v⟩w + ⟨v,w⟩u − ⟨w,u⟩v", provenance="derived")
def cross3_axioms(settings):
    rng = rng_for(settings, 7)
    worst = 0.0
    for _ in range(DRAWS):
        u, v, w = rng.standard_normal(8), rng.standard_normal(8), rng.standard_normal(8)
        x = cross3(u, v, w)
        scale = max(1.0, _gram_det(u, v, w))
        worst = max(
            worst,
            max(abs(inner(x, y)) for y in (u, v, w)) / scale,
            abs(inner(x, x) - _gram_det(u, v, w)) / scale,
            float(np.max(np.abs(cross3(v, u, w) + x))) / scale,
            float(np.max(np.abs(cross3(u, w, v) + x))) / scale,
        )
    return Outcome("orthogonal to arguments, ‖X‖² = Gram determinant, alternating", worst, worst, EXACT_TOL)


@router.check("octonion.cross3.values", anchor="X(e₀,e₁,e₂) = e₃, X(e₃,e₁,e₂) = −e₀, X(e₄,e₁,e₂) = −e₇")
def cross3_values(settings):
    cases = [
        (cross3(basis(0), basis(1), basis(2)), basis(3)),
        (cross3(basis(3), basis(1), basis(2)), -basis(0)),
        (cross3(basis(4), basis(1), basis(2)), -basis(7)),
    ]
    cases += [
        (cross3(basis(0), basis(i), basis(j)), cross2(basis(i), basis(j)))
        for i, j in product(range(1, 8), repeat=2)
    ]
    residual = max(float(np.max(np.abs(got - want))) for got, want in cases)
    return Outcome("basis values and X(e₀, e_i, e_j) = e_i × e_j", residual, residual, EXACT_TOL)


@router.check("octonion.cross3.skew_adjoint", anchor="⟨X(u,v,w), z⟩ = −⟨X(z,v,w), u⟩ for orthonormal z, u, v, w")
def cross3_skew_adjoint(settings):
    rng = rng_for(settings, 8)
    worst = 0.0
    for _ in range(DRAWS):
        z, u, v, w = _orthonormal(rng, 4)
        worst = max(worst, abs(inner(cross3(u, v, w), z) + inner(cross3(z, v, w), u)))
    return Outcome(f"over {DRAWS} orthonormal 4-frames", worst, worst, EXACT_TOL)
