"""
Shared test configuration and fixtures for the harmonia test suite.
"""

import numpy as np
import pytest

from harmonia.analysis.diffops import Calculus
from harmonia.config import Settings
from harmonia.models.grassmann import Grassmannian
from harmonia.models.sections import ACS6, SECTION_J, SIGMA2, SIGMA3, hopf_section


@pytest.fixture
def settings() -> Settings:
    """Default settings with the sample counts cut down for unit tests."""
    return Settings(samples=20, random_points=5, criticality_points=3, variations=2, variation_samples=8)


@pytest.fixture
def rng() -> np.random.Generator:
    """A seeded generator so every test sees the same draws."""
    return np.random.default_rng(20240601)


# Grassmannians
@pytest.fixture
def g27() -> Grassmannian:
    return Grassmannian(2, 7)


@pytest.fixture
def g28() -> Grassmannian:
    return Grassmannian(2, 8)


@pytest.fixture
def g38() -> Grassmannian:
    return Grassmannian(3, 8)


# Differentiation
@pytest.fixture
def exact() -> Calculus:
    """Product-rule derivatives; no step size involved."""
    return Calculus(method="exact")


@pytest.fixture
def jet() -> Calculus:
    return Calculus(method="jet")


# Sections
@pytest.fixture
def sections() -> dict:
    """Every distinguished section by name, Hopf on S³."""
    return {
        "sigma2": SIGMA2,
        "sigma3": SIGMA3,
        "J": SECTION_J,
        "hopf": hopf_section(2),
        "acs6": ACS6,
    }
