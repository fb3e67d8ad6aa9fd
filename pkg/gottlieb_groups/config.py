"""Runtime settings, read from ``GOTTLIEB_*`` environment variables."""

from functools import lru_cache
from pathlib import Path
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

BUNDLED_CATALOG = Path(__file__).parent / "data" / "catalog.txt"


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="GOTTLIEB_", extra="ignore")

    catalog: Optional[Path] = Field(default=None, description="Catalog file overriding the bundled one")
    log_level: str = "INFO"
    check_limit: int = Field(default=1000, ge=1, description="Largest n scanned by piecewise exhaustiveness checks")
    dump_k_max: int = Field(default=30, ge=0, description="Upper end of an open --k range in dump")

    def catalog_path(self, override: Optional[Path] = None) -> Path:
        """Pick the catalog file: explicit flag, then environment, then the bundled data."""
        if override is not None:
            return Path(override)
        if self.catalog is not None:
            return self.catalog
        return BUNDLED_CATALOG


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings()
