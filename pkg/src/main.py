"""objlin - command line entry point.

Usage: python -m src.main [--budget N] [--log-level LEVEL] COMMAND ...
"""

import argparse
import logging
import sys
from typing import Sequence

from src.config.log_config import configure_logging
from src.exceptions import BudgetExceededError, SpanError
from src.models import DocumentModel, ParityGroupoid, PSpan, format_rational
from src.services import (
    ExteriorPowerBuilder,
    compose,
    det_cardinality,
    enumerate_orientations,
    fiber_table,
    homotopy_cardinality,
    leibniz_scalar,
    matrix_of_span,
    pi0,
    scalar_cardinality,
    validate_action,
    validate_groupoid,
    validate_span,
)
from src.services.groupoid_service import with_parity
from src.services.span_service import scalar_of_span
from src.storage import DocumentManager
from src.views import (
    render_components,
    render_fiber_table,
    render_matrix,
    render_orientations,
    render_scalar,
    render_validation,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class UsageError(Exception):
    """Bad FILE#name reference."""


# ========== Reference resolution ==========

def _load(manager: DocumentManager, reference: str) -> tuple[DocumentModel, str]:
    if "#" not in reference:
        raise UsageError(f"reference '{reference}' must look like FILE#name")
    file_part, name = reference.rsplit("#", 1)
    model = manager.load(file_part)
    if name not in model.names():
        raise UsageError(f"'{name}' is not defined in {file_part} (known: {', '.join(model.names())})")
    return model, name


def _span(manager: DocumentManager, reference: str) -> PSpan:
    model, name = _load(manager, reference)
    if name not in model.spans:
        raise UsageError(f"'{name}' is not a span")
    return model.spans[name]


def _groupoid_or_span(manager: DocumentManager, reference: str) -> ParityGroupoid | PSpan:
    model, name = _load(manager, reference)
    if name in model.groupoids:
        return model.groupoids[name]
    if name in model.spans:
        return model.spans[name]
    raise UsageError(f"'{name}' is an action, expected a groupoid or span")


# ========== Commands ==========

def cmd_validate(args, manager: DocumentManager) -> tuple[str, int]:
    model = manager.load(args.file)
    reports = []
    for name, g in sorted(model.groupoids.items()):
        reports.append(validate_groupoid(g, f"groupoid '{name}'"))
    for name, sp in sorted(model.spans.items()):
        report = validate_span(sp, check_feet=True)
        report.subject = f"span '{name}'"
        reports.append(report)
    for name, action in sorted(model.actions.items()):
        report = validate_action(action)
        report.subject = f"action '{name}'"
        reports.append(report)
    code = EXIT_OK if all(r.ok for r in reports) else EXIT_INVALID
    return render_validation(reports), code


def cmd_card(args, manager: DocumentManager) -> tuple[str, int]:
    value = _groupoid_or_span(manager, args.ref)
    if isinstance(value, ParityGroupoid):
        return render_components(pi0(value), homotopy_cardinality(value)), EXIT_OK
    if not value.is_scalar():
        raise SpanError("card needs a scalar (span from the point to the point); use matrix")
    sc = scalar_of_span(value)
    return render_scalar(sc, scalar_cardinality(sc)), EXIT_OK


def cmd_pi0(args, manager: DocumentManager) -> tuple[str, int]:
    value = _groupoid_or_span(manager, args.ref)
    if isinstance(value, PSpan):
        value = with_parity(value.apex)
    return render_components(pi0(value)), EXIT_OK


def cmd_matrix(args, manager: DocumentManager) -> tuple[str, int]:
    return render_matrix(matrix_of_span(_span(manager, args.ref))), EXIT_OK


def cmd_compose(args, manager: DocumentManager) -> tuple[str, int]:
    first, second = _span(manager, args.first), _span(manager, args.second)
    return render_matrix(matrix_of_span(compose(first, second))), EXIT_OK


def cmd_extpow(args, manager: DocumentManager) -> tuple[str, int]:
    builder = ExteriorPowerBuilder(args.budget)
    value = _groupoid_or_span(manager, args.ref)
    if isinstance(value, ParityGroupoid):
        power = builder.power(value, args.k, symmetric=args.sym)
        return render_components(pi0(power.groupoid)), EXIT_OK
    return render_matrix(matrix_of_span(builder.exterior_power_span(value, args.k))), EXIT_OK


def cmd_det(args, manager: DocumentManager) -> tuple[str, int]:
    value = det_cardinality(_span(manager, args.ref), args.budget)
    return format_rational(value) + "\n", EXIT_OK


def cmd_leibniz(args, manager: DocumentManager) -> tuple[str, int]:
    sc = leibniz_scalar(_span(manager, args.ref))
    return render_scalar(sc, scalar_cardinality(sc)), EXIT_OK


def cmd_report(args, manager: DocumentManager) -> tuple[str, int]:
    report = fiber_table(_span(manager, args.ref), args.k, args.budget)
    return render_fiber_table(report, listing=args.listing), EXIT_OK


def cmd_orientations(args, manager: DocumentManager) -> tuple[str, int]:
    value = _groupoid_or_span(manager, args.ref)
    if isinstance(value, PSpan):
        raise UsageError("orientations needs a groupoid")
    return render_orientations(enumerate_orientations(value)), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per engine operation."""
    parser = argparse.ArgumentParser(prog="objlin", description="Objective linear algebra over parity groupoids")
    parser.add_argument("--budget", type=int, default=None, help="morphism budget for exterior powers")
    parser.add_argument("--log-level", default=None, help="logging level (default: LOG_LEVEL)")
    parser.add_argument("--fixtures", default=None, help="fixture directory (default: FIXTURE_DIR)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate every entry of a document")
    p.add_argument("file")
    p.set_defaults(handler=cmd_validate)

    for name, handler, help_text in (
        ("card", cmd_card, "homotopy cardinality of a groupoid or scalar"),
        ("pi0", cmd_pi0, "connected components"),
        ("matrix", cmd_matrix, "cardinality matrix of a span"),
        ("det", cmd_det, "cardinality of the determinant span"),
        ("leibniz", cmd_leibniz, "objective Leibniz expansion"),
        ("orientations", cmd_orientations, "orientations of a parity groupoid"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("ref", metavar="FILE#name")
        p.set_defaults(handler=handler)

    p = sub.add_parser("compose", help="matrix of the composite of two spans")
    p.add_argument("first", metavar="FILE#a")
    p.add_argument("second", metavar="FILE#b")
    p.set_defaults(handler=cmd_compose)

    p = sub.add_parser("extpow", help="k-th exterior power of a groupoid or span")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--sym", action="store_true", help="symmetric power (groupoids only)")
    p.add_argument("ref", metavar="FILE#name")
    p.set_defaults(handler=cmd_extpow)

    p = sub.add_parser("report", help="fiber table of the k-th exterior power of an endo-span")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--listing", action="store_true", help="tab separated listing")
    p.add_argument("ref", metavar="FILE#span")
    p.set_defaults(handler=cmd_report)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Run one command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    configure_logging(args.log_level)
    manager = DocumentManager(args.fixtures)
    logger.info("running %s", args.command)

    try:
        output, code = args.handler(args, manager)
    except UsageError as exc:
        print(f"✗ {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"✗ {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"✗ {exc}", file=sys.stderr)
        return EXIT_INVALID
    sys.stdout.write(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
