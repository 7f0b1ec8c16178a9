import sys

from cli import run
from config import BaseConfig, get_configuration
from logtools import get_logger, setup_logging


def logger_setup(config: type[BaseConfig]) -> None:
    setup_logging(
        dir_output=str(config.LOG_DIR) if config.LOG_DIR is not None else None,
        base_file="xmodkit.log",
        log_level=config.LOG_LEVEL,
    )


def main() -> None:
    """
    Entry point of the ``xmodkit`` console script.

    Resolves the configuration for the current environment, sets up logging
    and exits with the code of the command given on the command line.
    """
    config = get_configuration()
    logger_setup(config)
    get_logger(__name__).debug(f"Using {config.__name__}")
    sys.exit(run(sys.argv[1:], config))


if __name__ == "__main__":
    main()
