"""riordantp command line: gen, check SUBJECT and catalan-like.

Exit codes: 0 when the checked property holds (or nothing was checked),
1 when it fails, 2 on usage errors.
"""

import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from .commands import cmd_catalan_like, cmd_check, cmd_gen
from .config import Settings
from .errors import RiordanTPError
from .render import render_document
from .schemas import (
    CatalanLikeRequest,
    CheckRequest,
    CheckSubject,
    GenRequest,
    OutputDocument,
    OutputFormat,
)
from .sequences import TailRule

logger = logging.getLogger("riordantp")

EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_USAGE = 2


def _split(text: Optional[str]) -> Optional[List[str]]:
    if text is None:
        return None
    return [part.strip() for part in text.split(",") if part.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default="plain")
    common.add_argument("--window", type=int, default=None,
                        help="leading window size used when no other size is given (default 10)")
    common.add_argument("--force", action="store_true", help="lift the size cap of all-orders checks")
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="log to stderr; repeat for debug output")

    spec = argparse.ArgumentParser(add_help=False)
    spec.add_argument("--name", help="registry triangle, e.g. pascal, catalan, motzkin")
    spec.add_argument("--z", help="Z-sequence prefix as a comma list")
    spec.add_argument("--a", help="A-sequence prefix as a comma list")
    spec.add_argument("--tail", choices=[t.value for t in TailRule], default=TailRule.ZERO.value)
    spec.add_argument("--params", help="a,b,s,t of a recursive matrix (a,b,r,s,t for jacobi checks)")
    spec.add_argument("--rows", type=int, default=None)

    parser = argparse.ArgumentParser(
        prog="riordantp",
        description="Riordan arrays, total positivity and Catalan-like numbers in exact arithmetic",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("gen", parents=[common, spec], help="print the rows of a triangle")

    check = sub.add_parser("check", parents=[common, spec], help="check a positivity property")
    check.add_argument("subject", choices=[s.value for s in CheckSubject])
    check.add_argument("--order", default=None, help="minor order k or 'all'")
    check.add_argument("--seq", help="sequence for pf checks as a comma list")

    catalan = sub.add_parser("catalan-like", parents=[common], help="print C_0..C_{count-1}(a,b;s,t)")
    catalan.add_argument("--params", required=True, help="a,b,s,t")
    catalan.add_argument("--count", type=int, required=True)
    return parser


def _spec_fields(args: argparse.Namespace) -> dict:
    return {
        "name": args.name,
        "z": _split(args.z),
        "a": _split(args.a),
        "tail": args.tail,
        "params": _split(args.params),
        "rows": args.rows,
        "window": args.window,
        "force": args.force,
    }


def run(args: argparse.Namespace, config: Settings) -> OutputDocument:
    if args.command == "gen":
        return cmd_gen(GenRequest(**_spec_fields(args)), config)
    if args.command == "check":
        request = CheckRequest(
            subject=args.subject, order=args.order, seq=_split(args.seq), **_spec_fields(args)
        )
        return cmd_check(request, config)
    return cmd_catalan_like(CatalanLikeRequest(params=_split(args.params), count=args.count), config)


def exit_code(document: OutputDocument) -> int:
    if document.command == "check" and not document.result["holds"]:
        return EXIT_FAILS
    return EXIT_HOLDS


def configure_logging(verbosity: int, config: Settings) -> None:
    level = {0: config.log_level, 1: "INFO"}.get(verbosity, "DEBUG")
    logging.basicConfig(level=level, format=config.log_format, stream=sys.stderr)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse has already printed its usage message
        return EXIT_USAGE if exc.code else EXIT_HOLDS

    # environment variables are ignored so identical argv gives identical output
    config = Settings.defaults()
    configure_logging(args.verbose, config)

    try:
        document = run(args, config)
    except (RiordanTPError, ValidationError) as exc:
        logger.debug(f"usage error: {exc!r}")
        print(f"riordantp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    sys.stdout.write(render_document(document, OutputFormat(args.format)))
    return exit_code(document)


if __name__ == "__main__":
    sys.exit(main())
