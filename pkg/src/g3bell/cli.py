"""Command-line entry point.

Exit codes: 0 when every claim verdict is confirmed, 1 when any check
contradicts (or cannot confirm) the expected outcome, 2 for usage or
configuration errors, 3 for output I/O failures.
"""

from __future__ import annotations

import argparse
import sys

from .audit import AuditConfig, TOOL_VERSION, emit, run_audit
from .bell import DEFAULT_ANGLES_DEG
from .ga import DEFAULT_TOLERANCE, Vector3

USAGE_ERROR = 2
IO_ERROR = 3

# CLI ingestion is forgiving: vectors within this of unit norm are
# normalized instead of rejected.
PAIR_NORM_SLACK = 1e-6


def _parse_vector(text: str) -> Vector3:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected x,y,z, got {text!r}")
    try:
        v = Vector3(*(float(p) for p in parts))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad vector component in {text!r}: {exc}") from exc
    n = v.norm()
    if abs(n - 1.0) > PAIR_NORM_SLACK:
        raise argparse.ArgumentTypeError(
            f"vector {text!r} has norm {n!r}; settings must be unit within {PAIR_NORM_SLACK:g}"
        )
    return v.normalized()


def pair_argument(text: str) -> tuple[Vector3, Vector3]:
    """Parse one --pair value of the form x1,y1,z1:x2,y2,z2."""
    halves = text.split(":")
    if len(halves) != 2:
        raise argparse.ArgumentTypeError(f"expected x1,y1,z1:x2,y2,z2, got {text!r}")
    return (_parse_vector(halves[0]), _parse_vector(halves[1]))


def angles_argument(text: str) -> tuple[float, float, float, float]:
    """Parse --angles as four comma- (or slash-) separated degrees."""
    parts = text.split(",") if "," in text else text.split("/")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(f"expected four angles A,A',B,B', got {text!r}")
    try:
        return tuple(float(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad angle in {text!r}: {exc}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="g3bell",
        description="Audit the trivector hidden-variable correlation model: "
                    "grade content of its expectation functionals, normalization "
                    "of the directed measure, and CHSH bounds of its scalarizations.",
    )
    parser.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE,
                        help="audit tolerance (default 1e-12)")
    parser.add_argument("--p-step", type=float, default=0.05, dest="p_step",
                        help="distribution grid step in (0, 1] (default 0.05)")
    parser.add_argument("--angles", type=angles_argument,
                        default=DEFAULT_ANGLES_DEG, metavar="A,A',B,B'",
                        help="CHSH setting angles in degrees, e1-e2 plane "
                             "(default 0,90,45,135)")
    parser.add_argument("--trials", type=int, default=10000,
                        help="random scenarios per scalarizer audit (default 10000)")
    parser.add_argument("--seed", type=int, default=42,
                        help="seed for the scenario sampler (default 42)")
    parser.add_argument("--format", choices=("text", "json"), default="text",
                        help="report format (default text)")
    parser.add_argument("--pair", type=pair_argument, action="append", default=[],
                        metavar="x1,y1,z1:x2,y2,z2",
                        help="extra setting pair to audit; repeatable")
    parser.add_argument("--version", action="version", version=f"%(prog)s {TOOL_VERSION}")
    return parser


def config_from_args(args: argparse.Namespace) -> AuditConfig:
    return AuditConfig(
        tolerance=args.tol,
        p_step=args.p_step,
        angles_deg=tuple(args.angles),
        trials=args.trials,
        seed=args.seed,
        output_format=args.format,
        extra_pairs=tuple(args.pair),
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = config_from_args(args)
    except ValueError as exc:
        print(f"g3bell: error: {exc}", file=sys.stderr)
        return USAGE_ERROR

    report = run_audit(config)
    document = emit(report)
    try:
        sys.stdout.write(document)
        sys.stdout.flush()
    except OSError as exc:
        print(f"g3bell: output failure: {exc}", file=sys.stderr)
        return IO_ERROR
    return 0 if report.all_confirmed() else 1


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
