import sys
import os
import argparse

# Add src to path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from pydantic import ValidationError

from config import config
from errors import InputError
from jobs import JobConfig, run_job, write_report
from utils.logger import logger, set_level


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--group", required=True, help="Built-in group (S3, S4, Z<n>, D<n>) or file:<path>")
    parser.add_argument("--class", dest="class_selector", default="all",
                        help="Class representative: index, e or cycle notation (default: all)")
    parser.add_argument("--irrep", default="all", help="Representation family, e.g. cyclic(2,1), or file:<path>")
    parser.add_argument("--max-matrix-dim", type=int, default=None,
                        help=f"Bound on dim^n for antisymmetrizers (default: {config.max_matrix_dim})")
    parser.add_argument("--out", help="Output file path (default: stdout)")
    parser.add_argument("--format", dest="output_format", choices=["json", "text"], default="json",
                        help="Output format (default: json)")
    parser.add_argument("--log-level", default=None, help="Override QDC_LOG_LEVEL")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Bicovariant calculi on the quantum codouble D*(G)")
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    # Classify command
    classify_parser = subparsers.add_parser("classify", help="List every calculus by (class, irrep) pair")
    _add_common(classify_parser)

    # Pipeline command
    pipeline_parser = subparsers.add_parser(
        "pipeline", help="Build one calculus, run every check, exterior algebra and cohomology"
    )
    _add_common(pipeline_parser)
    pipeline_parser.add_argument("--section", help="Section override file (file:<path>)")
    pipeline_parser.add_argument("--nmax", type=int, default=None,
                                 help=f"Highest exterior degree (default: {config.n_max})")
    pipeline_parser.add_argument("--hmax", type=int, default=None,
                                 help=f"Highest cohomology degree (default: {config.h_max})")
    pipeline_parser.add_argument("--verify-only", action="store_true",
                                 help="Run the checks only; skip the calculus dump and cohomology")
    pipeline_parser.add_argument("--relations", action="store_true",
                                 help="Include the degree-2 relation basis and quadratic-algebra dimensions")
    pipeline_parser.add_argument("--cohomology", action="store_true",
                                 help="Include d ranks and H^0, H^1 representatives")
    pipeline_parser.add_argument("--hilbert", action="store_true",
                                 help="Report whether the Lambda dimensions are palindromic")
    return parser


def job_from_args(args: argparse.Namespace) -> JobConfig:
    values = {
        "command": args.command,
        "group": args.group,
        "class_selector": args.class_selector,
        "irrep": args.irrep,
        "out": args.out,
        "output_format": args.output_format,
    }
    if args.max_matrix_dim is not None:
        values["max_matrix_dim"] = args.max_matrix_dim
    if args.command == "pipeline":
        values.update(
            section=args.section,
            verify_only=args.verify_only,
            relations=args.relations,
            cohomology=args.cohomology,
            hilbert=args.hilbert,
        )
        if args.nmax is not None:
            values["n_max"] = args.nmax
        if args.hmax is not None:
            values["h_max"] = args.hmax
    try:
        return JobConfig(**values)
    except ValidationError as e:
        raise InputError(f"Invalid arguments: {e}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.command:
        parser.print_help()
        return 0
    try:
        try:
            if args.log_level:
                set_level(args.log_level)
            config.validate_bounds()
            if args.command == "pipeline" and args.nmax is None and args.hmax is None:
                config.validate_degrees()
        except ValueError as e:
            raise InputError(str(e))
        job = job_from_args(args)
    except InputError as e:
        logger.error(str(e))
        print(f"Error: {e}", file=sys.stderr)
        return e.exit_code

    report, code = run_job(job)
    write_report(report, job.out, job.output_format)
    if code:
        print(f"Error: {report['error']['message']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
