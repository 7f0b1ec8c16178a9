import logging

def get_logger(name: str | None = None) -> logging.Logger:
    """
    Returns the named logger a module logs through.

    Modules call this once at import time as ``logger = get_logger(__name__)``
    so their records carry the package path.

    Args:
        name: Optional name for the logger.

    Returns:
        logging.Logger: Logger instance for the given name.
    """
    return logging.getLogger(name)
