from .checks import Property, run_check
from .cli import EXIT_BUDGET, EXIT_INVALID, EXIT_MALFORMED, EXIT_OK, build_parser, run
from .conversions import DIRECT, FORGETFUL, conversion_path, convert
from .documents import (
    KINDS,
    Document,
    DocumentError,
    canonicalize,
    category_from_body,
    category_to_body,
    document_from_structure,
    parse_document,
    read_document,
    serialize_document,
    structure_from_document,
)

__all__ = [
    "DIRECT",
    "EXIT_BUDGET",
    "EXIT_INVALID",
    "EXIT_MALFORMED",
    "EXIT_OK",
    "FORGETFUL",
    "KINDS",
    "Document",
    "DocumentError",
    "Property",
    "build_parser",
    "canonicalize",
    "category_from_body",
    "category_to_body",
    "conversion_path",
    "convert",
    "document_from_structure",
    "parse_document",
    "read_document",
    "run",
    "run_check",
    "serialize_document",
    "structure_from_document",
]
