# src/config/config.py
from pathlib import Path
import os
from dotenv import load_dotenv

# Load .env from project root only in development (not in production)
if os.getenv("XMODKIT_ENV", "development") != "production":
    project_root = Path(__file__).parent.parent.parent  # src/config → project root
    load_dotenv(project_root / ".env")

BASE_DIR = Path(__file__).parent.parent  # src/


def _optional_path(name: str) -> Path | None:
    value = os.getenv(name)
    return Path(value) if value else None


class BaseConfig:
    """Base configuration shared by all environments.

    Holds the search budget for the exhaustive enumerators, the worker count for
    partitioned sweeps, and where logs and fixture documents live.
    """
    # 1. Exhaustive search limits
    SEARCH_BUDGET = int(os.getenv("XMODKIT_BUDGET", "10000000"))
    MAX_WORKERS = int(os.getenv("XMODKIT_MAX_WORKERS", "4"))

    # 2. Logging; no directory means console only
    LOG_DIR = _optional_path("XMODKIT_LOG_DIR")
    LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING")

    # Canonical fixture documents shipped with the oracle package
    FIXTURE_DIR = BASE_DIR / "oracle" / "fixtures"

    @classmethod
    def ensure_dirs(cls):
        """Create the log directory if one is configured.

        Nothing is created when logging goes to the console only.
        """
        if cls.LOG_DIR is not None:
            cls.LOG_DIR.mkdir(parents=True, exist_ok=True)


class DevelopmentConfig(BaseConfig):
    """Development configuration used when running the CLI locally.

    Logs at INFO so law violations and their witnesses show up on stderr.
    """
    LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")


class TestConfig(BaseConfig):
    """Test configuration used by the automated test suite.

    Keeps the default budget fixed regardless of the environment and writes no
    log files.
    """
    SEARCH_BUDGET = 10_000_000
    MAX_WORKERS = 2
    LOG_DIR = None


class ProductionConfig(BaseConfig):
    """Configuration for batch runs, e.g. scheduled enumeration sweeps.

    Relies solely on environment variables and stays quiet unless something
    goes wrong.
    """
    LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING")


def get_configuration() -> type[BaseConfig]:
    """
    Determines and returns the configuration class for the current environment.

    Selects the configuration based on the XMODKIT_ENV environment variable,
    ensures the log directory exists, and returns the configuration class.

    Returns:
        type[BaseConfig]: The configuration class for the current environment.
    """
    config_map = {
        "development": DevelopmentConfig,
        "test": TestConfig,
        "production": ProductionConfig,
    }

    env = os.getenv("XMODKIT_ENV", "development")

    config = config_map.get(env, DevelopmentConfig)
    config.ensure_dirs()
    return config
