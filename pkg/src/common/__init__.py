from .errors import XmodkitError
from .logging import Logger, NullLogger
from .report import OracleReport, listify

__all__ = ["XmodkitError", "Logger", "NullLogger", "OracleReport", "listify"]
