import logging
import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

# Load environment variables
load_dotenv()

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Settings:
    """Runtime settings read from the environment (or a .env file)."""

    log_level: str = "WARNING"
    seed: int = 0
    degree_cap: int = 3
    workers: int = 1
    host: str = "127.0.0.1"
    port: int = 8000

    @classmethod
    def from_env(cls) -> "Settings":
        """
        Build settings from HOMWEYL_* environment variables.

        Returns:
            Settings instance; unset variables keep their defaults
        """
        defaults = cls()
        return cls(
            log_level=os.getenv("HOMWEYL_LOG_LEVEL", defaults.log_level).upper(),
            seed=_int_env("HOMWEYL_SEED", defaults.seed),
            degree_cap=_int_env("HOMWEYL_DEGREE_CAP", defaults.degree_cap),
            workers=_int_env("HOMWEYL_WORKERS", defaults.workers),
            host=os.getenv("HOMWEYL_HOST", defaults.host),
            port=_int_env("HOMWEYL_PORT", defaults.port),
        )


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"Ignoring non-integer {name}={raw!r}, using {default}")
        return default


def configure_logging(level: Optional[str] = None) -> None:
    """Configure root logging for an entry point."""
    logging.basicConfig(
        level=getattr(logging, (level or get_settings().log_level).upper(), logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


# Global settings instance
_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """
    Get or create the global settings instance.

    Returns:
        Settings instance
    """
    global _settings
    if _settings is None:
        _settings = Settings.from_env()
    return _settings


def reset_settings() -> None:
    """Forget the cached settings so the next call re-reads the environment."""
    global _settings
    _settings = None
