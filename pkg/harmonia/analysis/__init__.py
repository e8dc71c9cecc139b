from .diffops import (
    Calculus,
    DerivativeTable,
    LaplacianResult,
    SurfaceJet,
    criticality_form,
    curvature,
    nabla,
    rough_laplacian,
    second_nabla,
)
from .energy import (
    EnergyEstimate,
    Variation,
    VariationResult,
    bending_density,
    control_section,
    control_variation,
    estimate_energy,
    first_variation,
    random_variation,
)

__all__ = [
    "Calculus",
    "DerivativeTable",
    "LaplacianResult",
    "SurfaceJet",
    "criticality_form",
    "curvature",
    "nabla",
    "rough_laplacian",
    "second_nabla",
    "EnergyEstimate",
    "Variation",
    "VariationResult",
    "bending_density",
    "control_section",
    "control_variation",
    "estimate_energy",
    "first_variation",
    "random_variation",
]
