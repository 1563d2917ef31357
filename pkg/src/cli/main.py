"""
Command line interface for the Enriques moduli toolkit.

Usage:
    enriques decide --surface config/a2.surface "(2,[0,0,1,0,0,0,0,0,0,0;1],0)"
    enriques decide --surface config/unnodal.surface "(1,[0,0,0,0,0,0,0,0,0,0;0],1)" --json
    enriques fm "(0,[0,0,0,0,0,0,0,0,0,0;0],2)"
    enriques lattice pair "[1,0,0,0,0,0,0,0,0,0]" "[0,1,0,0,0,0,0,0,0,0]"
    enriques lattice isotropic "[1,1,0,0,0,0,0,0,0,0]"
    enriques lattice roots
    enriques validate --surface config/e8.surface

Exit codes: 0 decided, 1 input error, 2 search bound exhausted (verdict unknown).
"""
import argparse
import sys
from collections.abc import Callable
from math import isqrt

import structlog

from src.config.loader import SurfaceLoader
from src.config.settings import settings
from src.errors import (
    BoundTooLarge,
    EnriquesError,
    InputError,
    InvalidSurface,
    NotFoundWithinBound,
    ParityViolation,
    SearchBoundExceeded,
)
from src.cli.parsing import parse_class, parse_vector
from src.lattice.classes import E, F, pair, square
from src.lattice.enumeration import enumerate_by_norm
from src.lattice.form import E8_ROOT_HEIGHT
from src.moduli.existence import decide
from src.moduli.fourier_mukai import FMAction, check_consistency
from src.mukai.vector import chi, self_pairing
from src.schemas.reports import (
    DecideReport,
    FMReport,
    IsotropicReport,
    PairReport,
    ReductionReport,
    ReportBase,
    RootsReport,
    StepReport,
    SurfaceSummary,
    ValidateReport,
)
from src.surface.effectivity import root_representations
from src.surface.isotropic import isotropic_companion
from src.surface.model import SurfaceModel
from src.surface.reduction import weyl_reduce
from src.utils.helpers import render_document, timed
from src.utils.logging import setup_logging

logger = structlog.get_logger("enriques.cli")

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_UNKNOWN = 2


def default_model() -> SurfaceModel:
    """Unnodal classical surface polarized by e + f, used when no --surface is given."""
    return SurfaceModel(classical=True, nodal_roots=(), ample=E + F)


def load_model(args: argparse.Namespace, required: bool = False) -> SurfaceModel:
    if args.surface is None:
        if required:
            raise InputError(f"{args.command} needs --surface")
        return default_model().with_bounds(args.coeff_bound, args.height_bound)
    return SurfaceLoader(args.surface).load_model(args.coeff_bound, args.height_bound)


def emit(report: ReportBase, args: argparse.Namespace, seconds: float) -> None:
    if args.timing:
        report.timing_seconds = seconds
    sys.stdout.write(render_document(report.document(), as_json=args.json))


def cmd_decide(args: argparse.Namespace) -> int:
    """Decide non-emptiness of M_H(v)."""
    model = load_model(args, required=True)
    v = parse_vector(args.vector)
    if args.non_classical and model.classical:
        model = model.twin()

    with timed() as clock:
        verdict = decide(model, v, spherical=args.spherical)
        coefficients = None
        if args.trace and verdict.witness is not None:
            coefficients = root_representations(model, verdict.witness).representations[0]

    report = DecideReport.from_verdict(model, model.collapse_vector(v), verdict, coefficients)
    emit(report, args, clock.seconds)
    logger.info("Decided", vector=str(v), status=report.status, case=report.case)
    return EXIT_UNKNOWN if verdict.is_unknown else EXIT_OK


def cmd_fm(args: argparse.Namespace) -> int:
    """Apply the Fourier-Mukai transform to a Mukai vector."""
    classical = not args.non_classical
    v = parse_vector(args.vector)
    if not classical:
        v = v.collapse_torsion()
    action = FMAction(classical=classical)

    with timed() as clock:
        image = action(v)
        defined = not classical or v.rank % 2 == 0
        if not defined:
            closed_form = "not defined"
        else:
            closed_form = "agrees" if check_consistency(v, classical) else "disagrees"
        report = FMReport(
            classical=classical,
            vector=str(v),
            image=str(image),
            chi=int(chi(v)),
            self_pairing=self_pairing(v),
            image_self_pairing=self_pairing(image),
            involution="ok" if action.is_involution_on(v) else "failed",
            closed_form=closed_form,
        )
    emit(report, args, clock.seconds)
    return EXIT_OK


def cmd_lattice_pair(args: argparse.Namespace) -> int:
    a = parse_class(args.a)
    b = parse_class(args.b)
    with timed() as clock:
        report = PairReport(a=str(a), b=str(b), pairing=pair(a, b))
    emit(report, args, clock.seconds)
    return EXIT_OK


def cmd_lattice_reduce(args: argparse.Namespace) -> int:
    model = load_model(args)
    d = model.collapse(parse_class(args.d))
    with timed() as clock:
        trace = weyl_reduce(model, d)
    emit(ReductionReport.from_trace(trace, square(d)), args, clock.seconds)
    return EXIT_OK


def cmd_lattice_isotropic(args: argparse.Namespace) -> int:
    model = load_model(args)
    d = model.collapse(parse_class(args.d))
    with timed() as clock:
        companion = isotropic_companion(model, d)
        steps = None
        if args.trace:
            steps = [
                StepReport(root=str(s.root), result=str(s.result))
                for s in weyl_reduce(model, d).steps
            ]
    report = IsotropicReport(
        d=str(d),
        self_pairing=square(d),
        bound=isqrt(square(d)),
        companion=str(companion),
        pairing=pair(d, companion),
        steps=steps,
    )
    emit(report, args, clock.seconds)
    return EXIT_OK


def cmd_lattice_roots(args: argparse.Namespace) -> int:
    """Count the roots of the E8 block as a self-test."""
    height = E8_ROOT_HEIGHT if args.height_bound is None else args.height_bound
    with timed() as clock:
        count = len(enumerate_by_norm(-2, height, block="e8"))
    emit(RootsReport(count=count, summary=f"{count} roots"), args, clock.seconds)
    return EXIT_OK


def cmd_validate(args: argparse.Namespace) -> int:
    if args.surface is None:
        raise InputError("validate needs --surface")
    with timed() as clock:
        descriptor = SurfaceLoader(args.surface).load()
        try:
            model = descriptor.to_model()
        except InvalidSurface as exc:
            report = ValidateReport(source=str(args.surface), valid=False, violations=exc.violations)
        else:
            report = ValidateReport(
                source=str(args.surface), valid=True, surface=SurfaceSummary.from_model(model)
            )
    emit(report, args, clock.seconds)
    return EXIT_OK if report.valid else EXIT_INPUT_ERROR


class CLIParser(argparse.ArgumentParser):
    """Usage errors are input errors (exit 1); exit 2 means an unknown verdict."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT_ERROR, f"{self.prog}: error: {message}\n")


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--surface", type=str, default=None, help="Surface descriptor file")
    common.add_argument("--coeff-bound", type=int, default=None, help="Nodal-cycle coefficient bound")
    common.add_argument("--height-bound", type=int, default=None, help="Enumeration height bound")
    common.add_argument("--search-limit", type=int, default=None, help="Candidate safety limit")
    common.add_argument("--json", action="store_true", help="Emit JSON instead of YAML")
    common.add_argument("--trace", action="store_true", help="Include witnesses and reduction steps")
    common.add_argument("--timing", action="store_true", help="Include wall time in the report")
    common.add_argument(
        "--log-level",
        choices=["debug", "info", "warning", "error", "critical"],
        default=None,
        help="Override ENRIQUES_LOG_LEVEL",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = CLIParser(
        prog="enriques",
        description="Existence of stable sheaves on Enriques surfaces",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="Mukai vectors are written (r,[c1,...,c10;t],s) with s = 2a.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    decide_cmd = commands.add_parser("decide", parents=[common], help="Decide M_H(v) != empty")
    decide_cmd.add_argument("vector", help="Mukai vector (r,[c1,...,c10;t],s)")
    decide_cmd.add_argument(
        "--spherical", action="store_true", help="Use the rank-two spherical criterion when it applies"
    )
    decide_cmd.add_argument(
        "--non-classical", action="store_true", help="Decide on the K_X = 0 twin of the surface"
    )
    decide_cmd.set_defaults(handler=cmd_decide)

    fm_cmd = commands.add_parser("fm", parents=[common], help="Fourier-Mukai image of a vector")
    fm_cmd.add_argument("vector", help="Mukai vector (r,[c1,...,c10;t],s)")
    fm_cmd.add_argument("--non-classical", action="store_true", help="Transform with K_X = 0")
    fm_cmd.set_defaults(handler=cmd_fm)

    lattice_cmd = commands.add_parser("lattice", help="Lattice utilities")
    lattice = lattice_cmd.add_subparsers(dest="lattice_command", required=True)

    pair_cmd = lattice.add_parser("pair", parents=[common], help="Intersection pairing (a, b)")
    pair_cmd.add_argument("a")
    pair_cmd.add_argument("b")
    pair_cmd.set_defaults(handler=cmd_lattice_pair)

    reduce_cmd = lattice.add_parser("reduce", parents=[common], help="Weyl reduction of D")
    reduce_cmd.add_argument("d")
    reduce_cmd.set_defaults(handler=cmd_lattice_reduce)

    iso_cmd = lattice.add_parser("isotropic", parents=[common], help="Isotropic companion of D")
    iso_cmd.add_argument("d")
    iso_cmd.set_defaults(handler=cmd_lattice_isotropic)

    roots_cmd = lattice.add_parser("roots", parents=[common], help="Count the E8 roots")
    roots_cmd.set_defaults(handler=cmd_lattice_roots)

    validate_cmd = commands.add_parser("validate", parents=[common], help="Check a surface descriptor")
    validate_cmd.set_defaults(handler=cmd_validate)
    return parser


def run(args: argparse.Namespace, handler: Callable[[argparse.Namespace], int]) -> int:
    """Run one command, mapping library errors onto exit codes."""
    try:
        return handler(args)
    except InvalidSurface as exc:
        print("error: invalid surface model", file=sys.stderr)
        for violation in exc.violations:
            print(f"  - {violation}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (InputError, ParityViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (SearchBoundExceeded, BoundTooLarge, NotFoundWithinBound) as exc:
        print(f"unknown: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except (EnriquesError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def main(argv: list[str] | None = None) -> int:
    """Main entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.log_level)

    previous_limit = settings.search_limit
    if args.search_limit is not None:
        settings.search_limit = args.search_limit
    try:
        return run(args, args.handler)
    finally:
        settings.search_limit = previous_limit


if __name__ == "__main__":
    sys.exit(main())
