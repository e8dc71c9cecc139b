import logging

from ..config import Settings
from ..errors import UsageError
from ..models.report import VerificationReport
from ..models.sections import get_section
from . import criticality, curvature, diagram, energy, extensions, laplacians, lemmas, obstruction, octonion
from .base import SuiteRouter

logger = logging.getLogger(__name__)

ROUTERS: dict[str, SuiteRouter] = {
    router.name: router
    for router in (
        octonion.router,
        lemmas.sigma3_router,
        lemmas.j_router,
        laplacians.router,
        curvature.router,
        criticality.router,
        obstruction.router,
        energy.router,
        diagram.router,
        extensions.router,
    )
}


def run_suite(name: str, settings: Settings) -> tuple[list[VerificationReport], int]:
    """Run one suite, or every suite in order for ``all``; exit code 0 iff every check passed."""
    if name == "all":
        routers = list(ROUTERS.values())
    elif name in ROUTERS:
        routers = [ROUTERS[name]]
    else:
        raise UsageError(f"unknown suite {name!r}")
    if settings.section is not None:
        section = get_section(settings.section, settings.hopf_m)
        if not any(router.select(section.name) for router in routers):
            raise UsageError(f"suite {name!r} has no checks about {section.name!r}")
        logger.info("restricting to %s on G(%d,%d), %s fiber", section.name, section.k, section.n, section.fiber.kind)
    reports = [report for router in routers for report in router.run(settings)]
    return reports, 0 if all(report.passed for report in reports) else 1


__all__ = ["ROUTERS", "SuiteRouter", "run_suite"]
