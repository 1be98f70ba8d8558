# src/config/settings.py
import os
from dataclasses import dataclass
from pathlib import Path
from dotenv import load_dotenv

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


# Find the project root directory
def find_project_root():
    """Find the project root by looking for .env file"""
    current = Path(__file__).resolve()

    # Try multiple potential locations
    for parent in current.parents:
        if (parent / '.env').exists():
            return parent
        if (parent / 'src').exists() and (parent / '.env.template').exists():
            return parent

    # Default to two levels up from this file
    return current.parent.parent.parent


# Load environment variables with explicit path
PROJECT_ROOT = find_project_root()
ENV_PATH = PROJECT_ROOT / '.env'

# Missing .env is fine, every setting has a default
ENV_LOADED = load_dotenv(ENV_PATH) if ENV_PATH.exists() else False


@dataclass
class OracleConfig:
    """Size limits for the brute-force reference implementations"""
    max_denominator: int
    max_terms: int
    max_scan_denominator: int
    max_gap_points: int


@dataclass
class StreamConfig:
    """Digit stream limits and display precision"""
    max_digits: int
    display_digits: int
    sanity_bits: int


@dataclass
class BatchConfig:
    """Parallel sweep configuration"""
    max_workers: int
    batch_size: int
    output_dir: Path


class ConfigurationError(Exception):
    """Raised when configuration is invalid or missing"""
    pass


class Settings:
    """Central configuration management"""

    def __init__(self):
        self.oracle = OracleConfig(
            max_denominator=self._positive_int("NUMERATION_ORACLE_MAX_DENOMINATOR", 10000),
            max_terms=self._positive_int("NUMERATION_ORACLE_MAX_TERMS", 10000),
            max_scan_denominator=self._positive_int("NUMERATION_ORACLE_MAX_SCAN", 1000),
            max_gap_points=self._positive_int("NUMERATION_ORACLE_MAX_GAP_POINTS", 100),
        )

        self.stream = StreamConfig(
            max_digits=self._positive_int("NUMERATION_MAX_STREAM_DIGITS", 4096),
            display_digits=self._positive_int("NUMERATION_DISPLAY_DIGITS", 30),
            sanity_bits=self._positive_int("NUMERATION_SANITY_BITS", 256),
        )

        output_dir = Path(os.getenv("NUMERATION_OUTPUT_DIR", "output"))
        if not output_dir.is_absolute():
            output_dir = PROJECT_ROOT / output_dir

        self.batch = BatchConfig(
            max_workers=self._positive_int("NUMERATION_MAX_WORKERS", 4),
            batch_size=self._positive_int("NUMERATION_BATCH_SIZE", 250),
            output_dir=output_dir,
        )

        self.log_level = os.getenv("NUMERATION_LOG_LEVEL", "WARNING").upper()
        if self.log_level not in LOG_LEVELS:
            raise ConfigurationError(
                f"NUMERATION_LOG_LEVEL must be one of {', '.join(LOG_LEVELS)}, "
                f"got '{self.log_level}'"
            )

    @staticmethod
    def _positive_int(name: str, default: int) -> int:
        """Read a positive integer environment variable"""
        raw = os.getenv(name)
        if raw is None or raw.strip() == "":
            return default
        try:
            value = int(raw)
        except ValueError:
            raise ConfigurationError(
                f"{name} must be an integer, got '{raw}'\n"
                f"Check the value in {ENV_PATH} (see .env.template)"
            )
        if value <= 0:
            raise ConfigurationError(f"{name} must be positive, got {value}")
        return value


# Create settings instance
settings = Settings()
