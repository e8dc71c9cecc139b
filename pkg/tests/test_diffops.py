import numpy as np
import pytest

from harmonia.analysis.closed_forms import all_cases, j_cases, r_sign, sigma3_cases
from harmonia.analysis.diffops import Calculus, rough_laplacian
from harmonia.errors import DifferentiationError, PathDisagreementError, PreconditionError
from harmonia.models.bundles import NORMAL
from harmonia.models.grassmann import random_point
from harmonia.models.sections import SECTION_J, SIGMA2, SIGMA3, Section
from harmonia.utils.numdiff import derivative, mixed_derivative

EIGENVALUES = [(SIGMA3, -12.0), (SIGMA2, -8.0), (SECTION_J, -8.0)]


class TestNumdiff:
    def test_first_derivative(self):
        assert derivative(np.sin) == pytest.approx(1.0, abs=1e-10)
        assert np.allclose(derivative(lambda t: np.array([np.exp(t), t**3])), [1.0, 0.0], atol=1e-10)

    def test_mixed_derivative(self):
        value = mixed_derivative(lambda t, s: np.sin(t + 2 * s) + t * s)
        assert value == pytest.approx(-2.0 * np.sin(0.0) + 1.0, abs=1e-8)

    def test_noise_is_rejected(self):
        noise = np.random.default_rng(3)
        with pytest.raises(DifferentiationError):
            derivative(lambda t: noise.standard_normal(), h=1e-3, tol=1e-12)


class TestCalculus:
    def test_unknown_method(self):
        with pytest.raises(PreconditionError):
            Calculus(method="spectral")

    def test_from_settings(self, settings):
        calculus = Calculus.from_settings(settings, method="jet")
        assert (calculus.h, calculus.tol, calculus.method) == (settings.fd_step, settings.richardson_tol, "jet")
        assert calculus.with_method("nested").method == "nested"

    def test_tangent_must_sit_at_point(self, exact, g38, rng):
        with pytest.raises(PreconditionError):
            exact.nabla(SIGMA3, random_point(8, 3, rng), g38.basis_tangent(0, 4))

    def test_exact_needs_form(self, exact, g38):
        opaque = Section("opaque", 3, 8, NORMAL, SIGMA3.evaluate)
        with pytest.raises(PreconditionError):
            exact.nabla(opaque, g38.base, g38.basis_tangent(0, 4))


class TestClosedForms:
    @pytest.mark.parametrize("case", list(all_cases()), ids=lambda c: f"{c.identity}-{c.i}{c.k}{c.j}{c.ell}")
    def test_exact_path(self, exact, case):
        assert case.residual(case.compute(exact)) < 1e-10

    @pytest.mark.parametrize("case", [c for c in sigma3_cases() if c.kind == "second"][::17])
    def test_jet_path_sigma3(self, jet, case):
        assert case.residual(case.compute(jet)) < 1e-6

    @pytest.mark.parametrize("case", [c for c in j_cases() if c.kind == "second"][::13])
    def test_checked_path_j(self, case):
        assert case.residual(case.compute(Calculus(method="checked"))) < 1e-6

    def test_counts(self):
        cases = list(all_cases())
        assert sum(c.identity == "sigma3.nabla" for c in cases) == 15
        assert sum(c.identity == "J.second.same_slot" for c in cases) == 60
        assert any(c.identity == "J.second.same_slot" and (c.i, c.j, c.ell) == (2, 3, 0) for c in cases)

    def test_r_sign(self):
        assert r_sign(0, 1) == 1
        assert r_sign(1, 0) == -1
        assert r_sign(2, 0) == 1


class TestPathAgreement:
    def test_disagreement_raises(self, g38, monkeypatch):
        monkeypatch.setattr(Calculus, "_nested", lambda self, section, surface: np.ones(8))
        with pytest.raises(PathDisagreementError):
            Calculus(method="checked").second_nabla(SIGMA3, g38.surface(4, 0, 4, 0))

    def test_methods_agree_at_random_point(self, g28, rng):
        point = random_point(8, 2, rng)
        surface = g28.surface(3, 1, 6, 0, at=point)
        values = [Calculus(method=m).second_nabla(SECTION_J, surface) for m in ("exact", "jet", "nested")]
        assert np.allclose(values[0], values[1], atol=1e-6)
        assert np.allclose(values[0], values[2], atol=1e-6)


class TestLaplacian:
    @pytest.mark.parametrize("section,expected", EIGENVALUES, ids=["sigma3", "sigma2", "J"])
    def test_base_point(self, exact, section, expected):
        result = exact.rough_laplacian(section)
        assert result.eigen_estimate == pytest.approx(expected, abs=1e-10)
        assert result.residual < 1e-10

    @pytest.mark.parametrize("section,expected", EIGENVALUES, ids=["sigma3", "sigma2", "J"])
    def test_random_point(self, exact, section, expected, rng):
        point = random_point(section.n, section.k, rng)
        result = exact.rough_laplacian(section, point)
        assert result.eigen_estimate == pytest.approx(expected, abs=1e-9)
        assert result.residual < 1e-9

    def test_pullback_frame_agrees(self, jet, rng):
        point = random_point(8, 3, rng)
        direct = jet.rough_laplacian(SIGMA3, point)
        pulled = jet.rough_laplacian(SIGMA3, point, frame="pullback")
        assert np.allclose(direct.value, pulled.value, atol=1e-6)

    def test_unknown_frame(self, exact):
        with pytest.raises(PreconditionError):
            exact.rough_laplacian(SIGMA3, frame="moving")

    def test_module_wrapper(self):
        assert rough_laplacian(SIGMA2, method="exact").eigen_estimate == pytest.approx(-8.0, abs=1e-10)


class TestCurvatureAndCriticality:
    def test_curvature_antisymmetric(self, exact, rng):
        point = random_point(8, 3, rng)
        forward = exact.curvature(SIGMA3, 4, 0, 6, 1, at=point)
        backward = exact.curvature(SIGMA3, 6, 1, 4, 0, at=point)
        assert np.allclose(forward, -backward, atol=1e-12)

    @pytest.mark.parametrize("section", [SIGMA3, SIGMA2, SECTION_J], ids=["sigma3", "sigma2", "J"])
    def test_criticality_vanishes(self, exact, section, rng):
        assert np.max(np.abs(exact.criticality_values(section))) < 1e-10
        point = random_point(section.n, section.k, rng)
        assert np.max(np.abs(exact.criticality_values(section, point))) < 1e-9

    def test_criticality_form_linear(self, exact, g28):
        table = exact.table(SECTION_J)
        basis = g28.tangent_basis()
        x = 0.5 * basis[0] + 2.0 * basis[7]
        assert exact.criticality_form(SECTION_J, g28.base, x, table) == pytest.approx(0.0, abs=1e-10)
