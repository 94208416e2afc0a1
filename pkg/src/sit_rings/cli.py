"""The ``sit-rings`` command line.

Exit codes: 0 success, 1 a property fails or a counterexample or
unexpected divergence was found, 2 invalid input, 3 a size cap was
exceeded. Reports go to stdout, logging to stderr.
"""

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from pydantic import ValidationError

from . import __version__
from .amalgam import AmalgamRing
from .amalgam import AmalgamSpec
from .amalgam import realize
from .config import Caps
from .config import use_caps
from .constructions import build
from .corpus import CorpusEntry
from .corpus import CorpusSpec
from .corpus import generate_corpus
from .exceptions import CapExceeded
from .exceptions import SitRingsError
from .exceptions import SpecError
from .expressions import RingExpr
from .report import Report
from .report import amalgamate_report
from .report import build_report
from .report import classify_report
from .report import decompose_report
from .report import examples_report
from .report import verify_report
from .ring import FiniteRing
from .specfile import load_shipped_spec
from .specfile import parse_spec
from .specfile import shipped_specs
from .suite import run_suite
from .types import Command
from .types import ExitCode
from .types import OutputFormat
from .types import Scheme
from .worked_examples import paper_example_report


logger = logging.getLogger(__name__)


def _positive(value: str) -> int:
    number = int(value)
    if number < 1:
        msg = f"expected a positive integer: {value}"
        raise argparse.ArgumentTypeError(msg)
    return number


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        type=OutputFormat,
        choices=list(OutputFormat),
        default=OutputFormat.TEXT,
    )
    common.add_argument(
        "--max-order",
        type=_positive,
        metavar="N",
        help="cap on the order of any ring built or analysed",
    )
    common.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="log INFO (-v) or DEBUG (-vv) to stderr",
    )

    parser = argparse.ArgumentParser(
        prog="sit-rings",
        description="Idempotent/tripotent decompositions of finite rings.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    def spec_command(
        command: Command, summary: str
    ) -> argparse.ArgumentParser:
        sub = commands.add_parser(command, parents=[common], help=summary)
        sub.add_argument(
            "spec",
            help="spec file path, or the name of a bundled spec",
        )
        return sub

    spec_command(Command.BUILD, "build a ring and list its elements")
    spec_command(Command.CLASSIFY, "element classes, radical and verdicts")
    decompose = spec_command(Command.DECOMPOSE, "decompose elements")
    decompose.add_argument(
        "--scheme",
        type=Scheme,
        choices=list(Scheme),
        default=Scheme.SIT,
    )
    decompose.add_argument(
        "--strong",
        action="store_true",
        help="require the parts to commute",
    )
    decompose.add_argument(
        "--element", metavar="LABEL", help="decompose only this element"
    )
    spec_command(Command.AMALGAMATE, "build an amalgam spec and report it")

    verify = commands.add_parser(
        Command.VERIFY, parents=[common], help="run the theorem suite"
    )
    verify.add_argument(
        "specs",
        nargs="*",
        help="check these subjects instead of a generated corpus",
    )
    verify.add_argument(
        "--theorems",
        default="all",
        help="comma-separated catalogue ids, or 'all'",
    )
    verify.add_argument(
        "--corpus",
        default="default",
        help="corpus spec JSON file, or 'default'",
    )
    verify.add_argument("--workers", type=_positive, default=1, metavar="N")

    commands.add_parser(
        Command.PAPER_EXAMPLES,
        parents=[common],
        help="recompute the published worked examples",
    )
    return parser


def _configure_logging(verbosity: int) -> None:
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(
        stream=sys.stderr,
        level=level,
        format="%(levelname)s %(name)s: %(message)s",
    )


def _load(spec: str) -> RingExpr | AmalgamSpec:
    path = Path(spec)
    if not path.exists() and spec in shipped_specs():
        return load_shipped_spec(spec)
    return parse_spec(path)


def _subject(spec: str) -> FiniteRing | AmalgamRing:
    parsed = _load(spec)
    if isinstance(parsed, AmalgamSpec):
        return realize(parsed)
    return build(parsed)


def _ring(spec: str) -> FiniteRing:
    subject = _subject(spec)
    return subject.ring if isinstance(subject, AmalgamRing) else subject


def _corpus(args: argparse.Namespace) -> list[CorpusEntry]:
    if args.specs:
        return [CorpusEntry.of(_subject(s), s) for s in args.specs]
    if args.corpus == "default":
        return generate_corpus()
    try:
        spec = CorpusSpec.from_file(Path(args.corpus))
    except ValidationError as exc:
        raise SpecError(
            f"{args.corpus}: invalid corpus spec",
            context={"errors": [e["msg"] for e in exc.errors()]},
        ) from exc
    return generate_corpus(spec)


def execute(args: argparse.Namespace) -> Report:
    """Run one parsed invocation and return its report."""
    match args.command:
        case Command.BUILD:
            return build_report(_ring(args.spec))
        case Command.CLASSIFY:
            return classify_report(_ring(args.spec))
        case Command.DECOMPOSE:
            return decompose_report(
                _ring(args.spec),
                args.scheme,
                strong=args.strong,
                element=args.element,
            )
        case Command.AMALGAMATE:
            subject = _subject(args.spec)
            if not isinstance(subject, AmalgamRing):
                raise SpecError(
                    f"{args.spec} describes a ring, not an amalgam",
                    context={"spec": args.spec},
                )
            return amalgamate_report(subject)
        case Command.VERIFY:
            theorems = [
                t.strip() for t in args.theorems.split(",") if t.strip()
            ]
            result = run_suite(
                _corpus(args), theorems, max_workers=args.workers
            )
            return verify_report(result)
        case Command.PAPER_EXAMPLES:
            return examples_report(paper_example_report())
    raise SpecError(f"unknown command {args.command!r}")


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return ExitCode.OK if not exc.code else ExitCode.INVALID_INPUT
    _configure_logging(args.verbose)
    caps = Caps() if args.max_order is None else Caps.uniform(args.max_order)
    try:
        with use_caps(caps):
            report = execute(args)
    except CapExceeded as exc:
        logger.error("%s", exc)
        return ExitCode.CAP_EXCEEDED
    except (SitRingsError, OSError) as exc:
        logger.error("%s", exc)
        return ExitCode.INVALID_INPUT
    sys.stdout.write(report.render(args.format))
    return report.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
