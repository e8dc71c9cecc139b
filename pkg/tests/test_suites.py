import numpy as np
import pytest

from harmonia.config import SUITES, Settings
from harmonia.errors import TransportError, UsageError
from harmonia.models.sections import SECTION_NAMES
from harmonia.suites import ROUTERS, run_suite
from harmonia.suites import curvature, diagram, energy, obstruction
from harmonia.suites.base import Outcome, SuiteRouter, rng_for


@pytest.fixture
def router() -> SuiteRouter:
    """A throwaway router with one passing, one failing and one raising check."""
    router = SuiteRouter("scratch")

    @router.check("scratch.pass", anchor="1 = 1")
    def passing(settings):
        return Outcome("1", 1.0, 0.0, 1e-12)

    @router.check("scratch.fail", anchor="1 = 2", provenance="derived")
    def failing(settings):
        return Outcome("2", [1.0, 2.0], 1.0, 1e-12)

    @router.check("scratch.raise", anchor="transport", provenance="trivial")
    def raising(settings):
        raise TransportError("did not converge")

    return router


class TestOutcome:
    def test_verdict_from_tolerance(self):
        assert Outcome("x", 0.0, 1e-7, 1e-6).verdict()
        assert not Outcome("x", 0.0, 1e-5, 1e-6).verdict()

    def test_explicit_verdict_wins(self):
        assert Outcome("x", 9.0, 9.0, 5.0, passed=True).verdict()


class TestSuiteRouter:
    def test_registration_order(self, router):
        assert [check.check_id for check in router.checks] == ["scratch.pass", "scratch.fail", "scratch.raise"]

    def test_reports(self, router, settings):
        passing, failing, raising = router.run(settings)
        assert passing.passed and passing.provenance == "closed-form"
        assert not failing.passed
        assert failing.computed == [1.0, 2.0]
        assert not raising.passed
        assert raising.expected == "error: TransportError: did not converge"
        assert all(report.wall_time is not None for report in (passing, failing, raising))

    def test_select_by_section(self, router):
        assert len(router.select()) == 3
        assert router.select("scratch") == router.checks
        assert router.select("sigma3") == []

    def test_run_one(self, router, settings):
        report = router.run_one("scratch.fail", settings)
        assert report.check_id == "scratch.fail" and not report.passed
        with pytest.raises(UsageError):
            router.run_one("scratch.missing", settings)

    def test_rng_streams_are_independent_of_order(self, settings):
        first = rng_for(settings, 3).standard_normal(4)
        rng_for(settings, 4).standard_normal(100)
        assert np.array_equal(first, rng_for(settings, 3).standard_normal(4))


class TestRegistry:
    def test_every_suite_is_registered(self):
        assert list(ROUTERS) == [name for name in SUITES if name != "all"]

    def test_check_ids_are_unique(self):
        ids = [check.check_id for router in ROUTERS.values() for check in router.checks]
        assert len(ids) == len(set(ids))

    def test_lemma_families(self):
        ids = {check.check_id for check in ROUTERS["lemmas-J"].checks}
        assert {"J.nabla", "J.second.same_direction", "J.second.same_slot", "J.second.cross_slot"} <= ids
        ids = {check.check_id for check in ROUTERS["curvature"].checks}
        assert "sigma3.curvature.same_slot" in ids and "J.curvature.cross_slot" in ids

    def test_unknown_suite(self, settings):
        with pytest.raises(UsageError):
            run_suite("topology", settings)

    def test_every_section_has_checks(self):
        for name in SECTION_NAMES:
            assert any(router.select(name) for router in ROUTERS.values()), name

    def test_section_without_checks_in_suite(self, settings):
        with pytest.raises(UsageError):
            run_suite("octonion", settings.with_overrides(section="J"))

    def test_section_restricts_reports(self, settings):
        reports, code = run_suite("extensions", settings.with_overrides(section="acs6"))
        assert code == 0
        assert [report.check_id.split(".")[0] for report in reports] == ["acs6"] * 4


class TestSuites:
    def test_octonion_suite_passes(self, settings):
        reports, code = run_suite("octonion", settings)
        assert code == 0
        assert len(reports) == 10

    def test_r_sign_check(self, settings):
        outcome = curvature.r_sign_antisymmetry(settings)
        assert outcome.verdict() and outcome.residual == 0.0

    def test_loop_derivative_check(self, settings):
        outcome = obstruction.loop_derivative(settings)
        assert outcome.verdict()
        assert outcome.computed == pytest.approx([0.25, 0.5, 0.75], abs=1e-5)

    def test_degenerate_loop_check(self, settings):
        assert obstruction.degenerate_loop(settings).verdict()

    def test_parallel_obstruction_report(self, settings):
        report = obstruction.parallel_obstruction_report(settings)
        assert report.check_id == "obstruction.loop_derivative"
        assert report.passed
        assert report.computed == pytest.approx([0.25, 0.5, 0.75], abs=1e-5)

    def test_diagram_checks(self, settings):
        assert diagram.diagram_commutes(settings).verdict()
        assert diagram.diagram_geodesics(settings).verdict()
        assert diagram.diagram_isometry(settings).verdict()

    def test_lifted_generator(self):
        z = np.zeros((7, 7))
        z[3, 0], z[0, 3] = 1.0, -1.0
        lifted = diagram.lift_generator(z)
        assert lifted[4, 1] == 1.0 and lifted[1, 4] == -1.0
        assert not lifted[0].any() and not lifted[:, 0].any()

    def test_control_check_passes_at_defaults(self):
        outcome = energy.control_variations(Settings())
        assert outcome.verdict()
        assert outcome.residual > energy.CONTROL_ERRORS
