# Author: Victor
# Page name: config.py
# Page purpose: Runtime settings read from the environment
# Date of creation: 2026-10-16
import os
from functools import lru_cache
from typing import Optional

from pydantic import BaseModel, Field, field_validator

ENV_THREADS = "HEEGNER_PI_THREADS"
ENV_DIGITS = "HEEGNER_PI_DIGITS"
ENV_GUARD_BITS = "HEEGNER_PI_GUARD_BITS"
ENV_LOG_LEVEL = "HEEGNER_PI_LOG_LEVEL"


class Settings(BaseModel):
    threads: int = Field(default_factory=lambda: os.cpu_count() or 1, ge=0)
    default_digits: int = Field(default=100, ge=1)
    guard_bits: int = Field(default=96, ge=64)
    log_level: str = "WARNING"

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value):
        value = value.upper()
        if value not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"Unknown log level: {value}")
        return value

    @property
    def sequential(self):
        return self.threads == 0


def load_settings(environ: Optional[dict] = None) -> Settings:
    """Build settings from an environment mapping (os.environ by default)."""
    environ = os.environ if environ is None else environ
    values = {}
    if environ.get(ENV_THREADS, "").strip():
        values["threads"] = environ[ENV_THREADS].strip()
    if environ.get(ENV_DIGITS, "").strip():
        values["default_digits"] = environ[ENV_DIGITS].strip()
    if environ.get(ENV_GUARD_BITS, "").strip():
        values["guard_bits"] = environ[ENV_GUARD_BITS].strip()
    if environ.get(ENV_LOG_LEVEL, "").strip():
        values["log_level"] = environ[ENV_LOG_LEVEL].strip()
    return Settings(**values)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return load_settings()
