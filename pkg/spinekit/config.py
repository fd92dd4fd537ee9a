"""Configuration management using Pydantic settings."""
import os
from pathlib import Path
from typing import Optional

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Toolkit settings loaded from SPINEKIT_* environment variables."""

    # Workers (0 = one per CPU)
    threads: int = 0

    # Logging
    log_level: str = "WARNING"

    # Subpolyhedron enumeration
    max_components: int = 62
    parallel_min_subsets: int = 65536

    # Numerics
    quad_tolerance: float = 1e-10
    volume_tolerance: float = 1e-9
    lobachevsky_terms: int = 60

    # Fixtures
    fixtures_dir: Optional[Path] = None

    model_config = SettingsConfigDict(
        env_prefix="SPINEKIT_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore"
    )

    def worker_count(self) -> int:
        """Effective number of workers, capped by SPINEKIT_THREADS when set."""
        available = os.cpu_count() or 1
        if self.threads > 0:
            return max(1, min(self.threads, available))
        return available

    def fixture_root(self) -> Path:
        """Directory holding the transcribed o-graph fixtures."""
        if self.fixtures_dir is not None:
            return Path(self.fixtures_dir)
        return Path(__file__).parent / "fixtures"


# Global settings instance
settings = Settings()
