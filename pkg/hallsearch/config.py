"""
Configuration Management using Pydantic Settings

Settings provide defaults (windows, thresholds, logging) and may be overridden
from the environment. The search space itself is always described by an
explicit SearchConfig built from command-line flags.
"""

from fractions import Fraction
from pathlib import Path
from typing import Annotated, Any, Dict, Literal, Optional

import xxhash
from pydantic import (
    BaseModel,
    BeforeValidator,
    ConfigDict,
    Field,
    PlainSerializer,
    field_validator,
    model_validator,
)
from pydantic_settings import BaseSettings, SettingsConfigDict

from .exceptions import ConfigurationError


def parse_rational(value: Any) -> Fraction:
    """Parse "p/q", an int, or a Fraction into a Fraction"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError("boolean is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"not a rational: {value!r}") from e
    raise ValueError(f"not a rational: {value!r}")


Rational = Annotated[
    Fraction,
    BeforeValidator(parse_rational),
    PlainSerializer(lambda f: str(f), return_type=str),
]


class SearchSettings(BaseSettings):
    """
    How a search is split into work

    Only fields that leave the hit set unchanged live here; everything that
    defines the search space is given on the command line.
    """

    chunk_size: int = Field(default=64, ge=1, description="b values per work unit")
    shards: int = Field(default=1, ge=1, le=256, description="Worker processes")

    model_config = SettingsConfigDict(
        env_prefix="HALLSEARCH_SEARCH_",
        case_sensitive=False,
    )


class OracleSettings(BaseSettings):
    """Defaults for the brute-force oracle"""

    n_max: int = Field(default=16, ge=1, description="Sample |k| <= n_max*sqrt(x)")
    large_scan_x: int = Field(default=400_000_000, ge=2, description="Ranges above need --force")
    recheck_period: int = Field(default=1 << 16, ge=1, description="Full isqrt re-check period")
    log_base: float = Field(default=0.0, ge=0.0, description="Count-model log base (0 = natural)")

    model_config = SettingsConfigDict(env_prefix="HALLSEARCH_ORACLE_", case_sensitive=False)


class LoggingSettings(BaseSettings):
    """Logging configuration"""

    level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = Field(default="INFO")
    format: Literal["json", "text"] = Field(default="text")
    directory: Optional[Path] = Field(default=None, description="Log directory")

    model_config = SettingsConfigDict(env_prefix="HALLSEARCH_LOG_", case_sensitive=False)


class Settings(BaseSettings):
    """
    Main application settings

    Loads defaults from environment variables and a .env file.
    """

    search: SearchSettings = Field(default_factory=SearchSettings)
    oracle: OracleSettings = Field(default_factory=OracleSettings)
    logging: LoggingSettings = Field(default_factory=LoggingSettings)

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_nested_delimiter="__",
        case_sensitive=False,
        extra="ignore",
    )


class SearchConfig(BaseModel):
    """
    Description of one search run

    The fingerprint covers every field that changes which hits are produced
    or how work is split into checkpointed chunks; output paths and the
    near-miss logging threshold are excluded.
    """

    b_lo: int = Field(..., ge=2)
    b_hi: int = Field(..., ge=2)
    u: Rational = Fraction(1, 3)
    c2_cap_override: Optional[int] = Field(default=None, ge=1)
    theta: Rational = Fraction(1)
    log_theta: Optional[Rational] = None
    n_window: int = Field(default=1, ge=0)
    i_window: int = Field(default=2, ge=0)
    min_hit_x: int = Field(default=10, ge=2)
    shards: int = Field(default=1, ge=1)
    chunk_size: int = Field(default=64, ge=1)
    checkpoint_path: Optional[Path] = None
    output_path: Optional[Path] = None
    output_format: Literal["tsv", "jsonl"] = "tsv"

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @field_validator("u")
    @classmethod
    def validate_u(cls, v: Fraction) -> Fraction:
        if not (0 < v <= Fraction(1, 2)):
            raise ValueError("u must satisfy 0 < u <= 1/2")
        return v

    @field_validator("theta", "log_theta")
    @classmethod
    def validate_theta(cls, v: Optional[Fraction]) -> Optional[Fraction]:
        if v is not None and v <= 0:
            raise ValueError("ratio thresholds must be positive")
        return v

    @model_validator(mode="after")
    def validate_range(self) -> "SearchConfig":
        if self.b_lo > self.b_hi:
            raise ValueError("b_lo must not exceed b_hi")
        if self.log_theta is not None and self.log_theta > self.theta:
            raise ValueError("log_theta must not exceed theta")
        return self

    def fingerprint(self) -> str:
        """Stable hash of the search-space fields"""
        payload = self.model_dump_json(
            include={
                "b_lo",
                "b_hi",
                "u",
                "c2_cap_override",
                "theta",
                "n_window",
                "i_window",
                "min_hit_x",
                "shards",
                "chunk_size",
                "output_format",
            }
        )
        return xxhash.xxh64_hexdigest(payload.encode("utf-8"))


# Operating points of the two long runs: (u, b_hi)
PRESETS: Dict[str, Dict[str, Any]] = {
    "deep": {"u": Fraction(1, 3), "b_hi": 600_000_000},
    "wide": {"u": Fraction(1, 4), "b_hi": 5_000_000_000},
}


def apply_preset(name: str, overrides: Dict[str, Any]) -> Dict[str, Any]:
    """Merge a named preset under explicit overrides"""
    if name not in PRESETS:
        raise ConfigurationError(
            f"Unknown preset: {name}",
            context={"preset": name, "known": ",".join(sorted(PRESETS))},
        )
    merged = dict(PRESETS[name])
    merged.update({key: value for key, value in overrides.items() if value is not None})
    return merged


# Global settings instance
_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Get global settings instance (singleton pattern)"""
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def reload_settings() -> Settings:
    """Reload settings from environment (useful for testing)"""
    global _settings
    _settings = Settings()
    return _settings
