"""
Command-line entry point: ``python -m src.cli <command> [options] [document]``
"""

import argparse
import logging
import sys
import time
from pathlib import Path
from typing import List, Optional, Tuple

from ..dsl.builder import build_document
from ..dsl.parser import parse_spec
from ..utils.config import configure_logging, get_settings
from ..utils.errors import KolchinError
from ..utils.validators import ValidationError, validate_count
from .commands import COMMANDS
from .report import RunReport

logger = logging.getLogger(__name__)

NO_DOCUMENT = {"examples"}


def _target(text: str) -> Tuple[int, int]:
    try:
        big_r, big_s = (validate_count(part.strip(), "target") for part in text.split(","))
    except (ValueError, ValidationError):
        raise argparse.ArgumentTypeError(f"expected R,S with non-negative integers, got '{text}'")
    return big_r, big_s


def _count(text: str) -> int:
    try:
        return validate_count(text, "count")
    except ValidationError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the report as JSON")
    common.add_argument("--timing", action="store_true", help="report wall time in milliseconds")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")

    document = argparse.ArgumentParser(add_help=False, parents=[common])
    document.add_argument("document", type=Path, help=".dk or .dd document")
    document.add_argument("--name", help="block to use when the document declares several")

    parser = argparse.ArgumentParser(
        prog="kolchin",
        description="Differential and differential-difference field extensions, computed exactly",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("verify-kernel", parents=[document], help="check a differential kernel")
    sub.add_parser("verify-dd", parents=[document], help="check a dd-kernel and its commutation")
    sub.add_parser("classify", parents=[document], help="leaders of a kernel or dd-kernel")
    sub.add_parser("classify-diff", parents=[document], help="σ-leaders and the depth bound")
    prolong = sub.add_parser("prolong", parents=[document], help="prolong a differential kernel")
    prolong.add_argument("--steps", type=_count, required=True)
    dd_prolong = sub.add_parser("dd-prolong", parents=[document], help="prolong a dd-kernel in ξ")
    dd_prolong.add_argument("--steps", type=_count, required=True)
    dd_prolong.add_argument("--M", type=_count, required=True, help="locality bound")
    sub.add_parser("linearize", parents=[document], help="re-index a dd-kernel to length (r, 1)")
    sub.add_parser("check-hypotheses", parents=[document], help="hypothesis conditions of a realization")
    realize = sub.add_parser("realize", parents=[document], help="realize a dd-kernel to a larger length")
    realize.add_argument("--target", type=_target, required=True, help="R,S")
    realize.add_argument("--lenient", action="store_true",
                         help="realize even when a hypothesis fails, recording a note")
    sub.add_parser("commute-check", parents=[document], help="δσ against σδ on the document's field")
    sub.add_parser("adjoin-preimage", parents=[document], help="adjoin σ-preimages of b and its derivatives")
    sub.add_parser("perfect-extend", parents=[document], help="truncated differentially perfect extension")
    r_map = sub.add_parser("r-map", parents=[document], help="p-th root of a constant, 0 otherwise")
    r_map.add_argument("--element", required=True)
    sub.add_parser("examples", parents=[common], help="run the bundled example suite")
    return parser


def resolve_document(path: Path) -> Path:
    """A path as given, or else a file of that name among the bundled documents"""
    if path.exists():
        return path
    bundled = get_settings().data_dir / path.name
    return bundled if bundled.exists() else path


def run(args: argparse.Namespace, argv: List[str]) -> RunReport:
    report = RunReport(command=args.command, argv=argv)
    started = time.perf_counter()
    try:
        built = None
        if args.command not in NO_DOCUMENT:
            path = resolve_document(args.document)
            built = build_document(parse_spec(path.read_text(encoding="utf-8")))
        COMMANDS[args.command](args, built, report)
    except (ValidationError, OSError) as exc:
        logger.info("%s: input error %s", args.command, exc)
        report.error(exc)
    except KolchinError as exc:
        logger.info("%s: %s", args.command, exc)
        report.add(type(exc).__name__, False, detail=str(exc))
    if args.timing:
        report.timing_ms = int((time.perf_counter() - started) * 1000)
    return report.finalize()


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one command and print its report

    Returns:
        0 on pass, 1 when a verdict is negative, 2 on usage or input errors
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    configure_logging(args.verbose)
    report = run(args, argv)
    print(report.model_dump_json(indent=2) if args.json else report.render_text())
    return report.exit_code
