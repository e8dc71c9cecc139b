from functools import lru_cache
from typing import Any, Optional

from dotenv import load_dotenv
from pydantic import Field, ValidationError
from pydantic_settings import BaseSettings, SettingsConfigDict

from .errors import UsageError
from .models.sections import SECTION_NAMES

SUITES = (
    "octonion",
    "lemmas-sigma3",
    "lemmas-J",
    "laplacians",
    "curvature",
    "criticality",
    "parallel-obstruction",
    "energy",
    "diagram-phi",
    "extensions",
    "all",
)

TABLES = ("epsilon-table", "tangent-basis", "lemma-values")


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="HARMONIA_", env_file=".env", extra="ignore"
    )

    # Differentiation
    fd_step: float = Field(1e-3, gt=0, lt=0.1)
    richardson_tol: float = Field(1e-7, gt=0)
    path_agreement_tol: float = Field(1e-5, gt=0)

    # Tolerance tiers
    fiber_tol: float = Field(1e-10, gt=0)
    closed_form_tol: float = Field(1e-6, gt=0)
    fd_tol: float = Field(1e-4, gt=0)

    # Sampling
    samples: int = Field(200, ge=1)
    random_points: int = Field(100, ge=1)
    criticality_points: int = Field(25, ge=1)
    variations: int = Field(20, ge=1)
    variation_samples: int = Field(64, ge=2)
    variation_step: float = Field(1e-2, gt=0)

    # Parallel transport
    transport_step: float = Field(1e-3, gt=0)
    transport_tol: float = Field(1e-8, gt=0)
    transport_max_halvings: int = Field(6, ge=0)

    hopf_m: int = Field(2, ge=1)

    seed: int = 42
    suite: str = "all"
    section: Optional[str] = None
    record_timings: bool = False
    log_level: str = "WARNING"

    json_path: Optional[str] = None
    csv_path: Optional[str] = None
    table: str = "lemma-values"

    def with_overrides(self, **updates: Any) -> "Settings":
        """Copy with CLI overrides applied and re-validated."""
        updates = {key: value for key, value in updates.items() if value is not None}
        try:
            settings = Settings.model_validate({**self.model_dump(), **updates})
        except ValidationError as exc:
            raise UsageError(f"invalid configuration: {exc}") from exc
        if settings.suite not in SUITES:
            raise UsageError(f"unknown suite {settings.suite!r}")
        if settings.table not in TABLES:
            raise UsageError(f"unknown table {settings.table!r}")
        if settings.section is not None and settings.section not in SECTION_NAMES:
            raise UsageError(f"unknown section {settings.section!r}")
        return settings

    def echo(self) -> dict:
        """Configuration as written into every report."""
        return self.model_dump(exclude={"json_path", "csv_path", "log_level"})


@lru_cache
def get_settings() -> Settings:
    load_dotenv()
    try:
        return Settings()
    except ValidationError as exc:
        raise UsageError(f"invalid configuration: {exc}") from exc
