"""The ``xmodkit`` command line.

``run(argv)`` parses the arguments, dispatches to one subcommand and maps
errors to exit codes: 0 success, 1 invalid structure or failed check,
2 malformed input or refused conversion, 3 search budget exceeded.
"""

import argparse
import json
import os
import sys
from itertools import product
from pathlib import Path
from typing import Sequence

from common import OracleReport, XmodkitError, listify
from config import BaseConfig, get_configuration
from equivalences import RoundTrip, natural_iso_check
from fincat import FinCatX
from logtools import get_logger
from oracle import (
    BudgetExceeded,
    SweepRunner,
    TableSearch,
    all_fixtures,
    enumerate_actions,
    enumerate_precrossed,
    enumerate_xmods,
    small_catalogue,
)
from utils import get_version

from .checks import Property, run_check
from .conversions import convert
from .documents import (
    KINDS,
    DocumentError,
    document_from_structure,
    parse_document,
    read_document,
    serialize_document,
    structure_from_document,
)

logger = get_logger(__name__)

EXIT_OK, EXIT_INVALID, EXIT_MALFORMED, EXIT_BUDGET = 0, 1, 2, 3

GEOMETRIC = ("splitepi", "reflgraph", "relcat")
ALGEBRAIC = ("action", "prexmod", "xmod")
ENUMERATORS = {
    "action": enumerate_actions,
    "prexmod": enumerate_precrossed,
    "xmod": enumerate_xmods,
}


class _ArgumentError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """An ArgumentParser that raises instead of exiting on bad arguments."""

    def error(self, message: str):
        raise _ArgumentError(message)


def _emit(args: argparse.Namespace, report: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(report, ensure_ascii=False, sort_keys=True))
    else:
        print(text)


def _report_text(label: str, report: OracleReport) -> str:
    if report.ok:
        return f"PASS {label}: {report.note} (checked {report.checked})"
    return f"FAIL {label}: {report.note} (witness: {report.to_dict()['witness']}, checked {report.checked})"


def _budget(args: argparse.Namespace, config: type[BaseConfig]) -> int:
    if getattr(args, "budget", None) is not None:
        return args.budget
    if env := os.getenv("XMODKIT_BUDGET"):
        return int(env)
    return config.SEARCH_BUDGET


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text, encoding="utf-8")
    except OSError as e:
        raise DocumentError(f"Cannot write {out}: {e}") from e
    logger.info(f"Wrote {out}")


def _load_category(path: str) -> FinCatX:
    doc = read_document(path)
    if doc.kind != "category":
        raise DocumentError(f"{path} is a {doc.kind} document, expected a category")
    return structure_from_document(doc)


# ---- subcommands ----


def cmd_validate(args, config) -> int:
    doc = read_document(args.file)
    structure_from_document(doc)
    _emit(args, {"ok": True, "kind": doc.kind}, f"VALID {doc.kind}")
    return EXIT_OK


def cmd_convert(args, config) -> int:
    doc = read_document(args.file)
    via = [kind for chunk in args.via for kind in chunk.split(",") if kind]
    unknown = [kind for kind in via if kind not in KINDS]
    if unknown:
        raise DocumentError(f"Unknown kind {unknown[0]!r} in --via")
    result = convert(structure_from_document(doc), doc.kind, args.to, via)
    text = serialize_document(document_from_structure(result, doc.meta or None))
    # the output must load back under its own kind
    structure_from_document(parse_document(text))
    _write(text, args.output)
    return EXIT_OK


def cmd_roundtrip(args, config) -> int:
    doc = read_document(args.file)
    if doc.kind in GEOMETRIC:
        direction = RoundTrip.SPLITEPI
    elif doc.kind in ALGEBRAIC:
        direction = RoundTrip.DISTLAW
    else:
        raise DocumentError(f"Nothing to round-trip in a {doc.kind} document")
    report = natural_iso_check(direction, structure_from_document(doc))
    _emit(args, {"direction": direction.value, **report.to_dict()}, _report_text(f"roundtrip {direction.value}", report))
    return EXIT_OK if report else EXIT_INVALID


def cmd_enumerate(args, config) -> int:
    base, fiber = _load_category(args.base), _load_category(args.fiber)
    search = TableSearch(_budget(args, config), logger)
    count = 0
    for structure in ENUMERATORS[args.kind](base, fiber, search):
        count += 1
        body = document_from_structure(structure).body
        print(json.dumps(body, ensure_ascii=False, sort_keys=True), flush=True)
    logger.info(f"Enumerated {count} {args.kind} instance(s) in {search.evaluations} evaluations")
    return EXIT_OK


def cmd_check(args, config) -> int:
    doc = read_document(args.file)
    structure = structure_from_document(doc, strict=False)
    report = run_check(args.property, structure, TableSearch(_budget(args, config), logger))
    _emit(args, {"property": args.property, **report.to_dict()}, _report_text(args.property, report))
    return EXIT_OK if report else EXIT_INVALID


def cmd_sweep(args, config) -> int:
    runner = SweepRunner(_budget(args, config), logger, args.workers or config.MAX_WORKERS)
    if (args.base is None) != (args.fiber is None):
        raise DocumentError("--base and --fiber go together")
    if args.base is not None:
        outcomes = [runner.sweep_pair(args.base, _load_category(args.base), args.fiber, _load_category(args.fiber))]
    else:
        catalogue = small_catalogue(args.max_order)
        pairs = [(b, catalogue[b], y, catalogue[y]) for b, y in product(catalogue, repeat=2)]
        outcomes = runner.run(pairs)
    for outcome in outcomes:
        _emit(
            args,
            outcome.to_dict(),
            f"{'PASS' if outcome.ok else 'FAIL'} {outcome.base}/{outcome.fiber}: "
            f"{outcome.instances} pre-crossed, {outcome.peiffer} Peiffer, {outcome.composed} composed"
            + (f", error: {outcome.error}" if outcome.error else ""),
        )
    return EXIT_OK if all(outcome.ok for outcome in outcomes) else EXIT_INVALID


def cmd_fixtures(args, config) -> int:
    if args.out is None:
        for path in sorted(Path(config.FIXTURE_DIR).glob("*.json")):
            _emit(args, {"file": str(path)}, str(path))
        return EXIT_OK
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for fixture in all_fixtures():
        path = out / fixture.filename
        _write(serialize_document(document_from_structure(fixture.payload, {"name": fixture.name})), str(path))
        _emit(args, {"file": str(path)}, str(path))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="xmodkit", description="Split epis, reflexive graphs and crossed modules over finite categories")
    parser.add_argument("--version", action="version", version=f"%(prog)s {get_version()}")

    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text", help="Report format")

    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", parents=[common], help="Validate a document")
    p.add_argument("file")
    p.set_defaults(handler=cmd_validate)

    p = sub.add_parser("convert", parents=[common], help="Convert a document along the equivalences")
    p.add_argument("--to", required=True, choices=KINDS)
    p.add_argument("--via", action="append", default=[], help="Intermediate kinds, repeatable or comma separated")
    p.add_argument("-o", "--output", help="Output file (default: stdout)")
    p.add_argument("file")
    p.set_defaults(handler=cmd_convert)

    p = sub.add_parser("roundtrip", parents=[common], help="Convert forth and back and check the comparison isomorphism")
    p.add_argument("file")
    p.set_defaults(handler=cmd_roundtrip)

    p = sub.add_parser("enumerate", parents=[common], help="Stream every instance on a base and fiber, one JSON line each")
    p.add_argument("--kind", required=True, choices=tuple(ENUMERATORS))
    p.add_argument("--base", required=True)
    p.add_argument("--fiber", required=True)
    p.add_argument("--budget", type=int)
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("check", parents=[common], help="Run a named verifier")
    p.add_argument("--property", required=True, choices=[prop.value for prop in Property])
    p.add_argument("--budget", type=int)
    p.add_argument("file")
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("sweep", parents=[common], help="Compare Peiffer with existence of a composition")
    p.add_argument("--base")
    p.add_argument("--fiber")
    p.add_argument("--max-order", type=int, default=4, help="Largest monoid order in the catalogue when no pair is given (at most 4)")
    p.add_argument("--workers", type=int)
    p.add_argument("--budget", type=int)
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser("fixtures", parents=[common], help="List or write the canonical fixtures")
    p.add_argument("--out", help="Directory to write the fixture documents to")
    p.set_defaults(handler=cmd_fixtures)

    return parser


def run(argv: Sequence[str] | None = None, config: type[BaseConfig] | None = None) -> int:
    """Runs one xmodkit command and returns its exit code.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:]).
        config: Configuration class (default: get_configuration()).

    Returns:
        int: The exit code.
    """
    config = config or get_configuration()
    parser = build_parser()
    try:
        args = parser.parse_args(list(sys.argv[1:] if argv is None else argv))
    except _ArgumentError as e:
        print(f"xmodkit: {e}", file=sys.stderr)
        return EXIT_MALFORMED
    except SystemExit as e:
        # --help and --version
        return e.code if isinstance(e.code, int) else EXIT_OK

    try:
        return args.handler(args, config)
    except DocumentError as e:
        print(f"ERROR: {e}", file=sys.stderr)
        return EXIT_MALFORMED
    except BudgetExceeded as e:
        print(f"BUDGET: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except XmodkitError as e:
        logger.info(f"{type(e).__name__}: {e}")
        _emit(
            args,
            {"ok": False, "error": type(e).__name__, "message": str(e.args[0]), "witness": listify(e.witness)},
            f"INVALID {type(e).__name__}: {e}",
        )
        return EXIT_INVALID