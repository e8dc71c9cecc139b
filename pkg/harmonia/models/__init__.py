from .bundles import (
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
from .grassmann import (
    GeodesicSurface,
    Grassmannian,
    OrientedSubspace,
    TangentVector,
    exp_action,
    projector,
    random_point,
)
from .octonion import Octonion, conj, cross2, cross3, epsilon, mul
from .report import SuiteReport, Summary, VerificationReport
from .sections import SECTION_NAMES, Section, acs6, get_section, hopf, section_j, sigma2, sigma3

__all__ = [
    "NORMAL",
    "SKEW",
    "FiberPath",
    "NormalElement",
    "ParallelTransport",
    "SkewElement",
    "bundle_morphism_phi",
    "covariant_derivative",
    "covariant_derivative_normal",
    "covariant_derivative_skew",
    "fiber_project_normal",
    "fiber_project_skew",
    "parallel_transport_normal",
    "phi",
    "GeodesicSurface",
    "Grassmannian",
    "OrientedSubspace",
    "TangentVector",
    "exp_action",
    "projector",
    "random_point",
    "Octonion",
    "conj",
    "cross2",
    "cross3",
    "epsilon",
    "mul",
    "SuiteReport",
    "Summary",
    "VerificationReport",
    "SECTION_NAMES",
    "Section",
    "acs6",
    "get_section",
    "hopf",
    "section_j",
    "sigma2",
    "sigma3",
]
