"""
Configuration settings for Adelic Curves
"""
import os
from typing import Dict, List
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


def _env_bool(key: str, default: str) -> bool:
    return os.getenv(key, default).lower() == "true"


class Settings:
    """Application settings"""

    # Application
    APP_NAME: str = os.getenv("APP_NAME", "Adelic Curves")
    APP_VERSION: str = os.getenv("APP_VERSION", "1.0.0")
    DEBUG: bool = _env_bool("DEBUG", "False")
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "WARNING")
    LOG_TO_FILE: bool = _env_bool("LOG_TO_FILE", "False")

    # Precision
    WORKING_PRECISION: int = int(os.getenv("WORKING_PRECISION", "12"))
    PRECISION_MARGIN: int = int(os.getenv("PRECISION_MARGIN", "4"))
    PRECISION_RETRIES: int = int(os.getenv("PRECISION_RETRIES", "6"))
    MIN_PRECISION: int = 4

    # Fields
    MAX_EXTENSION_DEGREE: int = int(os.getenv("MAX_EXTENSION_DEGREE", "6"))

    # Sampling
    DEFAULT_SEED: int = int(os.getenv("DEFAULT_SEED", "0"))
    RANDOM_SAMPLES: int = int(os.getenv("RANDOM_SAMPLES", "30"))

    # Reports
    REPORT_TIMINGS: bool = _env_bool("REPORT_TIMINGS", "False")
    REPORTS_DIR: str = "reports"

    @classmethod
    def validate(cls) -> List[str]:
        """Return a list of configuration problems (empty when valid)"""
        problems = []

        if cls.WORKING_PRECISION < cls.MIN_PRECISION:
            problems.append(f"WORKING_PRECISION must be >= {cls.MIN_PRECISION}")
        if cls.PRECISION_MARGIN < 1:
            problems.append("PRECISION_MARGIN must be positive")
        if cls.PRECISION_RETRIES < 1:
            problems.append("PRECISION_RETRIES must be positive")
        if not 1 <= cls.MAX_EXTENSION_DEGREE <= 12:
            problems.append("MAX_EXTENSION_DEGREE must lie in [1, 12]")
        if cls.LOG_LEVEL.upper() not in ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"):
            problems.append(f"Unknown LOG_LEVEL: {cls.LOG_LEVEL}")

        return problems

    @classmethod
    def get_base_dirs(cls) -> Dict[str, str]:
        """Get base directories for the application"""
        base_dir = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

        return {
            "base": base_dir,
            "logs": os.path.join(base_dir, "logs"),
            "reports": os.path.join(base_dir, cls.REPORTS_DIR),
        }


# Create settings instance
settings = Settings()
