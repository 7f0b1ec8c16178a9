from pathlib import Path
import logging.config


def get_logging_config(dir_output: str | None, base_file: str) -> dict:
    """Generates a logging configuration dictionary for xmodkit.
    Configures a console handler on stderr and, when a directory is given, a
    rotating JSON file handler inside it (the directory is created if missing).

    Args:
        dir_output: Directory where log files will be stored, or None for console only.
        base_file: Name of the log file.

    Returns:
        dict: Logging configuration dictionary compatible with logging.config.dictConfig.
    """
    handlers: dict = {
        "console": {
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "formatter": "simple",
        },
    }
    if dir_output is not None:
        path_output = Path(dir_output)
        path_output.mkdir(parents=True, exist_ok=True)
        handlers["file"] = {
            "class": "logging.handlers.RotatingFileHandler",
            "formatter": "json",
            "filename": str(path_output / base_file),
            "maxBytes": 204800,
            "backupCount": 10,
        }

    return {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "json": {
                "format": "%(asctime)s %(levelname)s %(message)s %(module)s %(funcName)s %(process)d",
                "class": "pythonjsonlogger.json.JsonFormatter",
            },
            "simple": {
                "format": "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s",
                "datefmt": "%H:%M:%S",
            },
        },
        "handlers": handlers,
        "loggers": {
            "": {
                "handlers": list(handlers),
                "level": "WARNING",
                "propagate": False,
            }
        },
    }


def setup_logging(dir_output: str | None, base_file: str, log_level: str = "WARNING") -> None:
    """Configures the root logger for the CLI.
    Sets up handlers, formatters and level once per process; later calls are
    ignored so repeated cli.run invocations (as in the tests) do not stack handlers.

    Args:
        dir_output: Directory where log files will be stored, or None for console only.
        base_file: Name of the log file.
        log_level: Logging level to set for the root logger.

    Returns:
        None
    """
    root = logging.getLogger()

    # Avoid reconfiguring only if WE already configured it
    if getattr(root, "_configured_by_xmodkit", False):
        return

    for h in root.handlers[:]:
        root.removeHandler(h)

    config = get_logging_config(dir_output=dir_output, base_file=base_file)
    logging.config.dictConfig(config)

    root.setLevel(log_level.upper())
    root._configured_by_xmodkit = True
