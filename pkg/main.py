"""
Main entry point for the piecewise toolkit.
Runs one verification or construction per invocation: JSON report on stdout,
human summary and JSON logs on stderr.
"""
import argparse
import sys
from typing import List, Optional

from config_system.config_loader import ConfigLoader, ConfigValidationError
from core.commands import CommandRunner
from exceptions import CapExceededError, DimensionMismatchError, InputError, StructureError, ToolkitError
from logging_config import log_error, setup_toolkit_logging
from piecewise.hopf import ALPHA_VARIANTS

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="piecewise",
        description="Coverings of algebras, flabby sheaves and piecewise principal comodule algebras",
    )
    parser.add_argument("--field", help="Ground field: q or gf<p> (default: the document's field)")
    parser.add_argument("--cap", type=int, help="Largest N for antichain and topology enumeration")
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Set the logging level (can also be set via PIECEWISE_LOG_LEVEL env var)",
    )
    parser.add_argument("--verbose", "-v", action="store_true",
                        help="Enable verbose logging (equivalent to --log-level DEBUG)")
    parser.add_argument("--config-root", default="./config",
                        help="Path to configuration directory (default: ./config)")
    parser.add_argument("--quiet", "-q", action="store_true", help="Do not print the summary to stderr")

    groups = parser.add_subparsers(dest="group", required=True)

    lattice = groups.add_parser("lattice", help="Antichains of nonempty subsets").add_subparsers(
        dest="action", required=True)
    lattice_enum = lattice.add_parser("enum", help="Enumerate antichains and check L(R(l)) = l")
    lattice_enum.add_argument("-N", type=int, required=True, dest="n")

    topology = groups.add_parser("topology", help="The coordinate topology on nonzero bit vectors").add_subparsers(
        dest="action", required=True)
    topology_enum = topology.add_parser("enum", help="Enumerate open sets with their antichains")
    topology_enum.add_argument("-N", type=int, required=True, dest="n")

    covering = groups.add_parser("covering", help="Families of algebra surjections").add_subparsers(
        dest="action", required=True)
    covering.add_parser("check", help="Surjectivity, zero kernel intersection and distributivity").add_argument(
        "path")

    crt = groups.add_parser("crt", help="Chinese-remainder gluing").add_subparsers(dest="action", required=True)
    crt.add_parser("glue", help="Glue compatible local elements").add_argument("path")

    sheaf = groups.add_parser("sheaf", help="Flabby sheaves of algebras").add_subparsers(
        dest="action", required=True)
    sheaf.add_parser("build", help="Sheaf of a distributive covering").add_argument("path")
    sheaf_verify = sheaf.add_parser("verify", help="Flabbiness and the gluing axiom")
    sheaf_verify.add_argument("path")
    sheaf_verify.add_argument("--all-covers", action="store_true",
                              help="Check every irredundant cover instead of basis covers")
    sheaf.add_parser("roundtrip", help="Covering -> sheaf -> covering, or the reverse").add_argument("path")

    hopf = groups.add_parser("hopf", help="Hopf algebras and comodule algebras").add_subparsers(
        dest="action", required=True)
    hopf.add_parser("verify", help="Hopf, comodule algebra or module algebra axioms").add_argument("path")
    hopf.add_parser("principal", help="Solve for a strong connection").add_argument("path")
    hopf.add_parser("glue", help="Glue strong connections over a fibre product").add_argument("path")
    hopf_piecewise = hopf.add_parser("piecewise", help="Principality of a comodule covering, piece by piece")
    hopf_piecewise.add_argument("path")
    hopf_piecewise.add_argument("--variant", type=int, choices=ALPHA_VARIANTS,
                                help="Coinvariant splitting used while gluing (default: from config)")

    data = groups.add_parser("data", help="Bundled input files").add_subparsers(dest="action", required=True)
    data.add_parser("validate", help="Format-validate input files (default: everything under data/)").add_argument(
        "paths", nargs="*")
    return parser


def dispatch(runner: CommandRunner, args: argparse.Namespace):
    command = (args.group, args.action)
    if command == ("lattice", "enum"):
        return runner.lattice_enum(args.n)
    if command == ("topology", "enum"):
        return runner.topology_enum(args.n)
    if command == ("covering", "check"):
        return runner.check_covering(args.path)
    if command == ("crt", "glue"):
        return runner.glue_crt(args.path)
    if command == ("sheaf", "build"):
        return runner.sheaf_build(args.path)
    if command == ("sheaf", "verify"):
        return runner.sheaf_verify(args.path, args.all_covers)
    if command == ("sheaf", "roundtrip"):
        return runner.sheaf_roundtrip(args.path)
    if command == ("hopf", "verify"):
        return runner.hopf_verify(args.path)
    if command == ("hopf", "principal"):
        return runner.hopf_principal(args.path)
    if command == ("hopf", "glue"):
        return runner.hopf_glue(args.path)
    if command == ("hopf", "piecewise"):
        return runner.hopf_piecewise(args.path, args.variant)
    if command == ("data", "validate"):
        return runner.data_validate(args.paths)
    raise InputError(f"unknown command {' '.join(command)}")


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command; returns the process exit code."""
    args = build_parser().parse_args(argv)
    logger = None
    try:
        config = ConfigLoader(args.config_root).load_toolkit_config()
        toolkit_logger = setup_toolkit_logging(
            log_level=args.log_level,
            verbose=args.verbose,
            config_level=config.settings.log_level,
        )
        logger = toolkit_logger.get_logger("main")

        runner = CommandRunner(args.config_root, field=args.field, cap=args.cap, config=config)
        runner.set_logger(logger)
        report = dispatch(runner, args)

        sys.stdout.write(report.to_json() + "\n")
        if not args.quiet:
            print(report.summary(), file=sys.stderr)
        return report.exit_code

    except (InputError, CapExceededError, DimensionMismatchError, StructureError, ConfigValidationError) as e:
        if logger is not None:
            log_error(logger, f"Input error: {e}", "Main", e)
        print(f"Input Error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ToolkitError as e:
        if logger is not None:
            log_error(logger, f"Toolkit error: {e}", "Main", e)
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as e:
        if logger is not None:
            log_error(logger, f"Unexpected error: {e}", "Main", e)
        print(f"Unexpected Error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
