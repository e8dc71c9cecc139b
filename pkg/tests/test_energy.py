import logging

import numpy as np
import pytest

from harmonia.analysis.energy import (
    Variation,
    VariationResult,
    bending_density,
    control_section,
    control_variation,
    estimate_energy,
    first_variation,
    random_variation,
    sample_points,
    tension,
    tension_first_variation,
)
from harmonia.errors import PreconditionError
from harmonia.models.grassmann import random_point
from harmonia.models.sections import SECTION_J, SIGMA2, SIGMA3

ANCHOR = np.full(8, 1.0 / np.sqrt(8.0))


class TestBending:
    @pytest.mark.parametrize(
        "section,expected", [(SIGMA3, 12.0), (SIGMA2, 8.0), (SECTION_J, 8.0)], ids=["sigma3", "sigma2", "J"]
    )
    def test_base_point(self, exact, section, expected):
        assert bending_density(section, section.grassmannian.base, exact) == pytest.approx(expected, abs=1e-10)

    def test_hopf_on_s3(self, exact, sections, rng):
        hopf = sections["hopf"]
        point = random_point(4, 1, rng)
        assert bending_density(hopf, point, exact) == pytest.approx(2.0, abs=1e-10)

    def test_jet_matches_exact(self, exact, jet, rng):
        point = random_point(8, 3, rng)
        assert bending_density(SIGMA3, point, jet) == pytest.approx(bending_density(SIGMA3, point, exact), abs=1e-7)


class TestEnergyEstimate:
    def test_sigma3(self, exact):
        estimate = estimate_energy(SIGMA3, 6, seed=5, calculus=exact)
        assert estimate.mean_bending == pytest.approx(12.0, abs=1e-9)
        assert estimate.std_bending < 1e-9
        assert estimate.energy_density == pytest.approx(13.5, abs=1e-9)
        assert (estimate.section, estimate.samples, estimate.seed) == ("sigma3", 6, 5)

    def test_j_energy_density(self, exact):
        assert estimate_energy(SECTION_J, 3, seed=1, calculus=exact).energy_density == pytest.approx(10.0, abs=1e-9)

    def test_reproducible(self, exact):
        first = estimate_energy(SIGMA2, 4, seed=9, calculus=exact)
        second = estimate_energy(SIGMA2, 4, seed=9, calculus=exact)
        assert first == second

    def test_single_sample(self, exact):
        assert estimate_energy(SIGMA2, 1, seed=0, calculus=exact).std_bending == 0.0

    def test_needs_samples(self):
        with pytest.raises(PreconditionError):
            estimate_energy(SIGMA3, 0, seed=0)

    def test_sample_points_seeded(self):
        first = sample_points(SIGMA3, 3, 11)
        second = sample_points(SIGMA3, 3, 11)
        assert all(a == b for a, b in zip(first, second))


class TestVariations:
    def test_field_is_admissible(self, rng):
        variation = random_variation(SIGMA3, rng)
        point = random_point(8, 3, rng)
        w = variation.field(point.frame)
        assert np.allclose(point.frame.T @ w, 0.0, atol=1e-12)
        assert np.dot(w, SIGMA3.value(point)) == pytest.approx(0.0, abs=1e-12)

    def test_skew_field_is_admissible(self, rng):
        variation = random_variation(SECTION_J, rng)
        point = random_point(8, 2, rng)
        w = variation.field(point.frame)
        assert np.allclose(w, -w.T, atol=1e-12)
        assert np.allclose(w @ point.frame, 0.0, atol=1e-12)
        assert SECTION_J.fiber.inner(w, SECTION_J.value(point)) == pytest.approx(0.0, abs=1e-12)

    def test_field_is_frame_independent(self, rng):
        variation = random_variation(SIGMA2, rng)
        point = random_point(7, 2, rng)
        rotated = point.rotated(np.array([[0.0, -1.0], [1.0, 0.0]]))
        assert np.allclose(variation.field(point.frame), variation.field(rotated.frame), atol=1e-12)

    def test_varied_sections_stay_unit(self, rng):
        varied = random_variation(SECTION_J, rng).at(0.3)
        for _ in range(3):
            assert varied(random_point(8, 2, rng)).is_unit(1e-12)

    def test_zero_amplitude_is_base(self, rng):
        varied = random_variation(SIGMA3, rng).at(0.0)
        point = random_point(8, 3, rng)
        assert np.array_equal(varied.value(point), SIGMA3.value(point))

    def test_trivial_direction_has_no_first_variation(self):
        still = Variation(SIGMA3, lambda frame: np.zeros(8), label="still")
        result = first_variation(still, samples=4, seed=2)
        assert result.estimate == 0.0
        assert result.standard_error == 0.0
        assert not result.inconclusive

    def test_needs_two_samples(self, rng):
        with pytest.raises(PreconditionError):
            first_variation(random_variation(SIGMA3, rng), samples=1)

    def test_sigma3_is_critical(self, rng):
        result = first_variation(random_variation(SIGMA3, rng), samples=16, seed=4)
        assert result.within(4.0)


class TestVariationResult:
    def test_verdicts(self):
        assert VariationResult("s", 0.1, 1.0, 10).inconclusive
        assert VariationResult("s", 0.1, 1.0, 10).within(3.0)
        assert VariationResult("s", 10.0, 1.0, 10).exceeds(5.0)
        assert not VariationResult("s", 10.0, 1.0, 10).inconclusive

    def test_conclusive_result_is_not_flagged(self, caplog):
        still = Variation(SIGMA3, lambda frame: np.zeros(8), label="still")
        with caplog.at_level(logging.WARNING, logger="harmonia.analysis.energy"):
            first_variation(still, samples=2, seed=0)
        assert not caplog.records


class TestControl:
    def test_control_is_unit_and_differs(self, rng):
        control = control_section(SIGMA3, ANCHOR)
        point = random_point(8, 3, rng)
        value = control.value(point)
        assert np.linalg.norm(value) == pytest.approx(1.0)
        assert np.allclose(point.frame.T @ value, 0.0, atol=1e-12)
        assert not np.allclose(value, SIGMA3.value(point))

    def test_weight_variation_moves_the_section(self, rng):
        control = control_section(SIGMA3, ANCHOR)
        variation = control_variation(control, ANCHOR)
        point = random_point(8, 3, rng)
        assert not np.allclose(variation.at(0.1).value(point), control.value(point))

    def test_needs_normal_bundle(self):
        with pytest.raises(PreconditionError):
            control_section(SECTION_J, ANCHOR)


class TestTension:
    def test_vanishes_for_sigma3(self, jet, rng):
        point = random_point(8, 3, rng)
        assert np.linalg.norm(tension(SIGMA3, point, jet)) < 1e-6

    def test_control_tension_is_tangent_and_nonzero(self, jet, rng):
        control = control_section(SIGMA3, ANCHOR)
        point = random_point(8, 3, rng)
        tau = tension(control, point, jet)
        assert np.linalg.norm(tau) > 1e-3
        assert np.dot(tau, control.value(point)) == pytest.approx(0.0, abs=1e-9)
        assert np.allclose(point.frame.T @ tau, 0.0, atol=1e-9)

    def test_weak_form_has_fixed_sign(self, jet):
        control = control_section(SIGMA3, ANCHOR)
        result = tension_first_variation(control, samples=6, seed=3, calculus=jet)
        assert result.estimate < 0.0
        assert result.standard_error < abs(result.estimate) * 10

    def test_weak_form_is_zero_for_sigma3(self, jet):
        result = tension_first_variation(SIGMA3, samples=3, seed=3, calculus=jet)
        assert result.estimate == pytest.approx(0.0, abs=1e-9)

    def test_needs_two_samples(self):
        with pytest.raises(PreconditionError):
            tension_first_variation(SIGMA3, samples=1)
