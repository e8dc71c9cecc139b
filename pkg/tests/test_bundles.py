import numpy as np
import pytest

from harmonia.analysis.closed_forms import j_nabla
from harmonia.errors import PreconditionError, TransportError
from harmonia.models.bundles import (
    NORMAL,
    SKEW,
    FiberPath,
    NormalElement,
    ParallelTransport,
    SkewElement,
    bundle_morphism_phi,
    covariant_derivative,
    covariant_derivative_normal,
    covariant_derivative_skew,
    fiber_project_normal,
    fiber_project_skew,
    parallel_transport_normal,
    phi,
)
from harmonia.models.grassmann import Grassmannian, OrientedSubspace, random_point
from harmonia.models.sections import SECTION_J, SIGMA2, SIGMA3, j_pair
from harmonia.suites.obstruction import V, candidate, gamma, loop_derivative_norm

E = np.eye(8)


class TestFiberElements:
    def test_normal_element_must_be_orthogonal(self, g38):
        with pytest.raises(PreconditionError):
            NormalElement(g38.base, E[1])
        assert NormalElement(g38.base, E[5]).is_unit()

    def test_projection_lands_in_fiber(self, rng):
        point = random_point(8, 3, rng)
        x = fiber_project_normal(point, rng.standard_normal(8))
        assert np.allclose(point.frame.T @ x.vec, 0.0, atol=1e-12)

    def test_skew_element_vanishes_on_the_plane(self, g28):
        with pytest.raises(PreconditionError):
            SkewElement(g28.base, j_pair(2, 3))
        element = SkewElement(g28.base, j_pair(0, 1))
        assert element.is_unit()

    def test_skew_projection(self, g28, rng):
        m = rng.standard_normal((8, 8))
        with pytest.raises(PreconditionError):
            fiber_project_skew(g28.base, m)
        element = fiber_project_skew(g28.base, m - m.T)
        assert np.allclose(element.op @ g28.base.frame, 0.0)

    def test_skew_inner_product_scale(self):
        assert SKEW.inner(j_pair(0, 1), j_pair(0, 1)) == pytest.approx(1.0)
        assert NORMAL.inner(E[3], E[3]) == 1.0


class TestCovariantDerivative:
    def test_rotating_normal_is_parallel(self, g38):
        path = FiberPath(
            curve=lambda t: g38.geodesic(0, 3, t),
            value=lambda t: -np.sin(t) * E[0] + np.cos(t) * E[3],
            velocity=lambda t: -np.cos(t) * E[0] - np.sin(t) * E[3],
        )
        for t in (0.0, 0.4, 1.2):
            assert covariant_derivative(path, t).norm() == pytest.approx(0.0, abs=1e-12)

    def test_numeric_derivative_without_velocity(self, g38):
        path = FiberPath(curve=lambda t: g38.geodesic(0, 3, t), value=lambda t: np.cos(t) * E[3] + np.sin(t) * E[4])
        derived = covariant_derivative_normal(path, 0.0)
        assert np.allclose(derived.vec, E[4], atol=1e-8)

    def test_fiber_kind_is_checked(self, g38):
        path = FiberPath(curve=lambda t: g38.base, value=lambda t: E[4])
        with pytest.raises(PreconditionError):
            covariant_derivative_skew(path, 0.0)

    @pytest.mark.parametrize("t", [np.pi / 6, np.pi / 4, np.pi / 3])
    def test_loop_derivative_norm(self, settings, t):
        assert loop_derivative_norm(t, 0.7, settings) == pytest.approx(np.sin(t) ** 2, abs=1e-6)

    def test_degenerate_loop(self, settings):
        assert loop_derivative_norm(0.0, 1.0, settings) == pytest.approx(0.0, abs=1e-9)


class TestParallelTransport:
    def test_along_geodesic(self, g38):
        moved = parallel_transport_normal(lambda t: g38.geodesic(0, 3, t), E[3], 1.0, step=1e-2)
        assert np.allclose(moved.vec, -np.sin(1.0) * E[0] + np.cos(1.0) * E[3], atol=1e-9)
        assert moved.base == g38.geodesic(0, 3, 1.0)

    def test_untouched_directions_stay(self, g38):
        moved = parallel_transport_normal(lambda t: g38.geodesic(0, 3, t), E[4], 0.8, step=1e-2)
        assert np.allclose(moved.vec, E[4], atol=1e-10)

    def test_zero_length(self, g38):
        moved = ParallelTransport(lambda t: g38.geodesic(0, 3, t))(E[5], 0.0)
        assert np.array_equal(moved.vec, E[5])

    def test_matches_closed_form_along_loop_curve(self):
        transport = ParallelTransport(lambda t: gamma(np.pi / 2, t), NORMAL, step=1e-3, tol=1e-8)
        moved = transport(V, np.pi / 4)
        assert np.allclose(moved.vec, candidate(np.pi / 2, np.pi / 4), atol=1e-7)

    def test_start_must_be_in_fiber(self, g38):
        with pytest.raises(PreconditionError):
            parallel_transport_normal(lambda t: g38.geodesic(0, 3, t), E[0], 0.5)

    def test_fails_when_tolerance_unreachable(self, g38):
        surface = g38.surface(3, 0, 5, 1)
        transport = ParallelTransport(lambda t: surface(t, t * t), NORMAL, step=1e-2, tol=1e-30, max_halvings=0)
        with pytest.raises(TransportError):
            transport((E[3] + E[5] + E[6]) / np.sqrt(3.0), 0.5)


class TestPhi:
    def test_base_point(self):
        assert phi(Grassmannian(2, 7).base) == Grassmannian(3, 8).base

    def test_only_on_g27(self, g38):
        with pytest.raises(PreconditionError):
            phi(g38.base)

    def test_diagram_commutes(self, rng):
        for _ in range(10):
            point = random_point(7, 2, rng)
            pushed = bundle_morphism_phi(SIGMA2(point))
            assert pushed.base == phi(point)
            assert np.allclose(pushed.vec, SIGMA3.value(phi(point)), atol=1e-12)

    def test_phi_of_frame(self):
        frame = np.zeros((7, 2))
        frame[3, 0] = frame[5, 1] = 1.0
        image = phi(OrientedSubspace(frame))
        assert np.array_equal(image.frame[:, 0], E[0])
        assert np.array_equal(image.frame[:, 1], E[4])
        assert np.array_equal(image.frame[:, 2], E[6])


def _inner_rate(fiber, path_x, path_y, t, h=1e-5):
    ahead = fiber.inner(path_x.value(t + h), path_y.value(t + h))
    behind = fiber.inner(path_x.value(t - h), path_y.value(t - h))
    return (ahead - behind) / (2.0 * h)


class TestMetricCompatibility:
    def test_normal_bundle(self, g38, rng):
        surface = g38.surface(3, 0, 5, 1)

        def curve(t):
            return surface(t, t * t)

        a, b, c = (rng.standard_normal(8) for _ in range(3))
        path_x = FiberPath(curve, lambda t: curve(t).projector @ (a + t * b))
        path_y = FiberPath(curve, lambda t: curve(t).projector @ (c + t * t * a))
        for t in (0.1, 0.5):
            rate = NORMAL.inner(covariant_derivative(path_x, t).vec, path_y.value(t)) + NORMAL.inner(
                path_x.value(t), covariant_derivative(path_y, t).vec
            )
            assert rate == pytest.approx(_inner_rate(NORMAL, path_x, path_y, t), abs=1e-5)

    def test_skew_bundle(self, g28, rng):
        surface = g28.surface(4, 0, 6, 1)

        def curve(t):
            return surface(t, t * t)

        a, b, c = (m - m.T for m in (rng.standard_normal((8, 8)) for _ in range(3)))
        path_x = FiberPath(curve, lambda t: SKEW.project(curve(t).projector, a + t * b), fiber=SKEW)
        path_y = FiberPath(curve, lambda t: SKEW.project(curve(t).projector, c - t * a), fiber=SKEW)
        for t in (0.2, 0.7):
            rate = SKEW.inner(covariant_derivative_skew(path_x, t).op, path_y.value(t)) + SKEW.inner(
                path_x.value(t), covariant_derivative_skew(path_y, t).op
            )
            assert rate == pytest.approx(_inner_rate(SKEW, path_x, path_y, t), abs=1e-5)


class TestSkewDerivative:
    @pytest.mark.parametrize("ell", [0, 1])
    @pytest.mark.parametrize("j", [2, 3, 5, 7])
    def test_j_along_basic_geodesic(self, g28, ell, j):
        path = FiberPath(
            curve=lambda s: g28.geodesic(ell, j, s),
            value=lambda s: SECTION_J.value(g28.geodesic(ell, j, s)),
            fiber=SKEW,
        )
        derived = covariant_derivative_skew(path, 0.0)
        assert np.allclose(derived.op, j_nabla(ell, j), atol=1e-6)


def _rotation(ell, j, t):
    r = np.eye(8)
    r[ell, ell] = r[j, j] = np.cos(t)
    r[j, ell], r[ell, j] = np.sin(t), -np.sin(t)
    return r


class TestSkewTransport:
    def test_conjugates_along_geodesic(self, g28):
        start = SECTION_J.value(g28.base)
        moved = ParallelTransport(lambda t: g28.geodesic(0, 3, t), SKEW, step=1e-2)(start, 1.0)
        r = _rotation(0, 3, 1.0)
        assert np.allclose(moved.op, r @ start @ r.T, atol=1e-8)
        assert moved.base == g28.geodesic(0, 3, 1.0)

    def test_start_must_be_in_fiber(self, g28):
        with pytest.raises(PreconditionError):
            ParallelTransport(lambda t: g28.geodesic(0, 3, t), SKEW)(j_pair(2, 3), 0.5)


class TestTransportNorm:
    def test_normal_over_half_turn(self, g38):
        moved = parallel_transport_normal(lambda t: g38.geodesic(0, 3, t), E[3], np.pi, step=1e-2)
        assert moved.norm() == pytest.approx(1.0, abs=1e-8)
        assert np.allclose(moved.vec, -E[3], atol=1e-7)

    def test_skew_over_half_turn(self, g28):
        start = SECTION_J.value(g28.base)
        moved = ParallelTransport(lambda t: g28.geodesic(1, 4, t), SKEW, step=1e-2)(start, np.pi)
        assert moved.norm() == pytest.approx(SKEW.norm(start), abs=1e-8)
