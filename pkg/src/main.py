"""
Main entry point for Adelic Curves
"""
import argparse
import json
import os
import sys
from typing import List, Optional

from loguru import logger
from pydantic import ValidationError

from .commands import COMMANDS, INPUT_ERRORS
from .config.run_config import RunConfig
from .config.settings import settings
from .curves.model import load_curve_spec
from .utils.errors import AdeleError
from .utils.report import report_writer

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INVALID = 2


def setup_logging():
    """Setup logging configuration"""

    # Remove default logger
    logger.remove()

    # Console logger on stderr; stdout carries the report
    logger.add(
        sys.stderr,
        level=settings.LOG_LEVEL.upper(),
        format="<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | <cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>",
        colorize=True,
    )

    if settings.LOG_TO_FILE:
        logs_dir = settings.get_base_dirs()["logs"]
        os.makedirs(logs_dir, exist_ok=True)
        logger.add(
            os.path.join(logs_dir, "adelic.log"),
            level="DEBUG" if settings.DEBUG else "INFO",
            format="{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {name}:{function}:{line} - {message}",
            rotation="1 day",
            retention="7 days",
            compression="zip",
        )

    logger.debug(f"Logging setup complete. Level: {settings.LOG_LEVEL}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--spec", required=True, help="curve spec (JSON)")
    common.add_argument("--precision", type=int, default=settings.WORKING_PRECISION, help="working precision")
    common.add_argument("--seed", type=int, default=settings.DEFAULT_SEED, help="random seed")
    common.add_argument("--out", help="write the JSON report to this path")
    common.add_argument("--json", action="store_true", dest="json_output", help="print the report as JSON")

    parser = argparse.ArgumentParser(prog="adelic", description=f"{settings.APP_NAME} v{settings.APP_VERSION}")
    subcommands = parser.add_subparsers(dest="command", required=True)

    subcommands.add_parser("h1dr", parents=[common], help="dimension and basis of H^1_dR")
    pairing = subcommands.add_parser("pairing", parents=[common], help="adelic residue pairing")
    pairing.add_argument("--omega", help="g for the first differential g dx")
    pairing.add_argument("--omega2", help="g for the second differential g dx")
    pairing.add_argument("--gram", action="store_true", help="Gram matrix of the basis cocycles")
    residues = subcommands.add_parser("residues", parents=[common], help="residues of a differential")
    residues.add_argument("--omega", required=True, help="g for the differential g dx")
    cartier = subcommands.add_parser("cartier", parents=[common], help="Cartier operator and its inverse")
    cartier.add_argument("--omega", required=True, help="g for the differential g dx")
    subcommands.add_parser("di-check", parents=[common], help="Deligne-Illusie suite in characteristic p")
    example1 = subcommands.add_parser("example1", parents=[common], help="closed (0, 1) adeles and H^1")
    example1.add_argument("--samples", type=int, default=settings.RANDOM_SAMPLES, help="number of sampled adeles")
    return parser


def validate_environment() -> bool:
    """Validate settings"""
    problems = settings.validate()
    for problem in problems:
        logger.error(f"Configuration problem: {problem}")
    return not problems


def _invalid(message: str, code: str = "invalid-spec") -> int:
    logger.error(message)
    print(json.dumps({"code": code, "message": message}), file=sys.stderr)
    return EXIT_INVALID


def main(argv: Optional[List[str]] = None) -> int:
    """Run one subcommand; returns the exit code"""
    setup_logging()
    args = build_parser().parse_args(argv)

    if not validate_environment():
        return EXIT_INVALID

    try:
        config = RunConfig(**{key: value for key, value in vars(args).items() if value is not None})
    except ValidationError as e:
        return _invalid(f"Invalid arguments: {e.errors()[0]['msg']}")

    try:
        curve = load_curve_spec(config.spec)
        report = COMMANDS[config.command].run(curve, config)
    except INPUT_ERRORS as e:
        return _invalid(e.message, e.code)
    except AdeleError as e:
        logger.error(f"{e.code}: {e.message}")
        return EXIT_FAIL

    if config.out:
        report_writer.write(report, config.out)
    print(report.render_json() if config.json_output else report.render_text())
    return EXIT_PASS if report.passed else EXIT_FAIL


if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        logger.info("Stopped by user")
        sys.exit(130)
