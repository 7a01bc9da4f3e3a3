"""Configuration management with validation and environment handling."""

from pathlib import Path

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from kout_mincut.domain.models.contraction_models import AmplificationConfig, EdgeReducer, PipelineVariant
from kout_mincut.observability import LOG_LEVELS


class ApplicationConfig(BaseSettings):
    """Main application configuration."""

    model_config = SettingsConfigDict(env_prefix="KOUT_", env_file=".env", extra="ignore")

    # Logging
    log_level: str = Field(default="INFO", description="Logging level")
    log_file: Path | None = Field(default=None, description="Log file path")

    # Execution
    workers: int = Field(default=1, ge=1, description="Threads used for independent repetitions")
    default_seed: int = Field(default=0, ge=0, le=2**64 - 1, description="Master seed when none is given")

    @field_validator("log_level", mode="before")
    @classmethod
    def normalize_log_level(cls, v: str) -> str:
        """Accept lowercase level names."""
        level = str(v).upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"unknown log level: {v}")
        return level


class PipelineConfig(BaseSettings):
    """Defaults for the contraction pipeline and its tunable constants."""

    model_config = SettingsConfigDict(env_prefix="KOUT_PIPELINE_", env_file=".env", extra="ignore")

    eps: float = Field(default=1.0, gt=0.0, le=1.0, description="Target cut slack: (2 - eps)-small cuts are kept")
    gamma: float = Field(default=1.0, gt=0.0, description="Failure exponent, probability O(n^-gamma)")
    p_hat: float = Field(default=0.05, gt=0.0, lt=1.0, description="Assumed per-repetition success probability")
    c_q: float = Field(default=8.0, gt=0.0, description="Repetition constant in q = c_q * gamma * ln n / p_hat")
    certificate_multiplier: float = Field(default=2.0, gt=0.0, description="Certificate strength k = mult * delta")
    edge_sample_rate_denominator: float = Field(
        default=2.0, gt=0.0, description="Random reducer marks edges with probability 1 / (denominator * delta)"
    )
    supernode_budget_factor: float = Field(default=8.0, gt=0.0, description="Forest oracle budget factor * n / delta")
    reducer: EdgeReducer = Field(default=EdgeReducer.CERTIFICATE, description="Edge reduction after 2-out")
    variant: PipelineVariant = Field(default=PipelineVariant.AMPLIFIED, description="Contraction strategy")
    solver: str = Field(default="stoer-wagner", description="Registered multigraph solver for the contracted graph")

    def amplification(self, n: int, **overrides) -> AmplificationConfig:
        """Build an :class:`AmplificationConfig` for an n-vertex graph."""
        values = {
            "eps": self.eps,
            "gamma": self.gamma,
            "p_hat": self.p_hat,
            "c_q": self.c_q,
            "certificate_multiplier": self.certificate_multiplier,
            "edge_sample_rate_denominator": self.edge_sample_rate_denominator,
            "supernode_budget_factor": self.supernode_budget_factor,
            "reducer": self.reducer,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return AmplificationConfig.for_graph(n, **values)


class HarnessConfig(BaseSettings):
    """Statistical harness constants. Thresholds come from pilot runs, not from theory."""

    model_config = SettingsConfigDict(env_prefix="KOUT_HARNESS_", env_file=".env", extra="ignore")

    component_ratio_threshold: float = Field(default=8.0, gt=0.0, description="Max components * delta / n")
    supernode_ratio_threshold: float = Field(default=8.0, gt=0.0, description="Max supernodes * delta / n")
    edge_ratio_threshold: float = Field(default=8.0, gt=0.0, description="Max contracted edges / n")
    pilot_slack: float = Field(default=1.5, ge=1.0, description="Multiplier applied to the pilot maximum")
    confirmation_trials: int = Field(default=100, ge=1, description="Fresh-seed trials per confirmation")
    sigma_tolerance: float = Field(default=3.0, gt=0.0, description="Binomial sigmas allowed around exact values")
    scaling_growth_limit: float = Field(default=2.6, gt=1.0, description="Max time growth per doubling of m")
    dense_flatness_factor: float = Field(default=2.0, ge=1.0, description="Max spread of time / m for dense runs")


class Settings:
    """Centralized settings management."""

    def __init__(self):
        self._app: ApplicationConfig | None = None
        self._pipeline: PipelineConfig | None = None
        self._harness: HarnessConfig | None = None

    @property
    def app(self) -> ApplicationConfig:
        """Get application configuration."""
        if self._app is None:
            self._app = ApplicationConfig()
        return self._app

    @property
    def pipeline(self) -> PipelineConfig:
        """Get pipeline configuration."""
        if self._pipeline is None:
            self._pipeline = PipelineConfig()
        return self._pipeline

    @property
    def harness(self) -> HarnessConfig:
        """Get harness configuration."""
        if self._harness is None:
            self._harness = HarnessConfig()
        return self._harness

    def reload(self) -> None:
        """Reload all configurations."""
        self._app = None
        self._pipeline = None
        self._harness = None


# Global settings instance
settings = Settings()
