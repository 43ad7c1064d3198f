"""
Main CLI application.

Grammar: sctool <subcommand> [paths] [options]. Reports go to standard output,
diagnostics and logs to standard error.
Author: DmitrTRC
"""

import argparse
import logging
import traceback
from pathlib import Path
from typing import Optional, Sequence

import pydantic
from rich.console import Console

from sctool.application.dto import MisrepSpec, RunConfig
from sctool.domain.constants import (
    APP_NAME,
    APP_VERSION,
    DEFAULT_MAX_WEIGHT,
    DEFAULT_TRIALS,
)
from sctool.domain.enums import (
    AggregationMode,
    Command,
    ExitCode,
    OracleCommand,
    OutputFormat,
)
from sctool.domain.exceptions import ConfigurationError, SCToolError
from sctool.infrastructure.config.settings import configure_settings
from sctool.infrastructure.logging import setup_logging
from sctool.presentation.cli.commands import (
    BaseCommand,
    CheckDomainCommand,
    CommitteeCommand,
    GenerateCommand,
    MajorityCommand,
    OracleCheckCommand,
    RecognizeCommand,
    VerifyCommand,
)

logger = logging.getLogger(__name__)

COMMANDS: dict[Command, type[BaseCommand]] = {
    Command.VERIFY: VerifyCommand,
    Command.RECOGNIZE: RecognizeCommand,
    Command.GENERATE: GenerateCommand,
    Command.MAJORITY: MajorityCommand,
    Command.CC: CommitteeCommand,
    Command.CHECK_DOMAIN: CheckDomainCommand,
    Command.ORACLE: OracleCheckCommand,
}


# ═══════════════════════════════════════════════════════════
# Argument Parsing
# ═══════════════════════════════════════════════════════════


def _rule(value: str) -> AggregationMode:
    try:
        return AggregationMode.from_string(value)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _common_options() -> argparse.ArgumentParser:
    """Options accepted by every subcommand."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.TEXT.value,
        help="output format (default: text)",
    )
    common.add_argument("--compact", action="store_true", help="unindented JSON")
    common.add_argument("--no-color", action="store_true", help="plain text output")
    common.add_argument("--log-level", default="WARNING", help="logging level")
    common.add_argument("--log-file", type=Path, help="also log to this file")
    common.add_argument("--debug", action="store_true", help="debug logging")
    return common


def _committee_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-k", type=int, required=True, help="committee size")
    parser.add_argument(
        "--rule",
        type=_rule,
        default=AggregationMode.UTILITARIAN,
        help="utilitarian (sum) or egalitarian (max)",
    )
    parser.add_argument(
        "--misrep",
        default="borda",
        help="borda | positional:<r1,...,rm> | approval:<file> | matrix:<file>",
    )


def build_parser() -> argparse.ArgumentParser:
    """
    Build the sctool argument parser.

    Returns:
        Parser with one subparser per subcommand
    """
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog=APP_NAME,
        description="Single-crossing profiles on trees: recognition and committees.",
    )
    parser.add_argument(
        "--version", action="version", version=f"{APP_NAME} {APP_VERSION}"
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    verify = sub.add_parser(
        Command.VERIFY.value, parents=[common], help="check a profile on a given tree"
    )
    verify.add_argument("profile", type=Path)
    verify.add_argument("tree", type=Path)

    recognize = sub.add_parser(
        Command.RECOGNIZE.value, parents=[common], help="find the minimal tree"
    )
    recognize.add_argument("profile", type=Path)

    generate = sub.add_parser(
        Command.GENERATE.value, parents=[common], help="witness profile of a tree"
    )
    generate.add_argument("tree", type=Path)
    generate.add_argument("-o", "--output", type=Path, help="profile file to write")

    majority = sub.add_parser(
        Command.MAJORITY.value, parents=[common], help="majority relation"
    )
    majority.add_argument("profile", type=Path)

    cc = sub.add_parser(
        Command.CC.value, parents=[common], help="optimal Chamberlin-Courant committee"
    )
    cc.add_argument("profile", type=Path)
    cc.add_argument("tree", type=Path)
    _committee_options(cc)
    cc.add_argument("--anchor", type=int, help="leaf to root the program at")

    check = sub.add_parser(
        Command.CHECK_DOMAIN.value, parents=[common], help="Condorcet domain sampling"
    )
    check.add_argument("profile", type=Path)
    check.add_argument("--seed", type=int, required=True)
    check.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    check.add_argument("--max-weight", type=int, default=DEFAULT_MAX_WEIGHT)

    oracle = sub.add_parser(Command.ORACLE.value, help="brute-force oracles")
    oracle_sub = oracle.add_subparsers(dest="oracle_command", required=True)
    trees = oracle_sub.add_parser(
        OracleCommand.TREES.value, parents=[common], help="labeled trees on n vertices"
    )
    trees.add_argument("n", type=int)
    oracle_recognize = oracle_sub.add_parser(
        OracleCommand.RECOGNIZE.value, parents=[common], help="try every tree"
    )
    oracle_recognize.add_argument("profile", type=Path)
    oracle_cc = oracle_sub.add_parser(
        OracleCommand.CC.value, parents=[common], help="try every committee"
    )
    oracle_cc.add_argument("profile", type=Path)
    _committee_options(oracle_cc)
    classical = oracle_sub.add_parser(
        OracleCommand.CLASSICAL.value, parents=[common], help="try every voter ordering"
    )
    classical.add_argument("profile", type=Path)

    return parser


def to_run_config(args: argparse.Namespace) -> RunConfig:
    """
    Convert parsed arguments into a validated RunConfig.

    Raises:
        ConfigurationError: On invalid flag values
    """
    misrep = getattr(args, "misrep", None)
    try:
        return RunConfig(
            command=Command(args.command),
            oracle_command=getattr(args, "oracle_command", None),
            profile_path=getattr(args, "profile", None),
            tree_path=getattr(args, "tree", None),
            vertices=getattr(args, "n", None),
            k=getattr(args, "k", None),
            mode=getattr(args, "rule", AggregationMode.UTILITARIAN),
            misrep=MisrepSpec.parse(misrep) if misrep else MisrepSpec(),
            anchor=getattr(args, "anchor", None),
            output_format=OutputFormat(args.format),
            output_path=getattr(args, "output", None),
            trials=getattr(args, "trials", DEFAULT_TRIALS),
            max_weight=getattr(args, "max_weight", DEFAULT_MAX_WEIGHT),
            seed=getattr(args, "seed", None),
        )
    except pydantic.ValidationError as e:
        error = e.errors()[0]
        field = ".".join(str(part) for part in error["loc"])
        raise ConfigurationError(error["msg"], field=field) from e


# ═══════════════════════════════════════════════════════════
# Application
# ═══════════════════════════════════════════════════════════


class CLIApp:
    """Main CLI application."""

    def __init__(self, console: Optional[Console] = None) -> None:
        """
        Initialize CLI application.

        Args:
            console: Console for reports; standard output by default
        """
        self.console = console
        self.errors = Console(stderr=True, highlight=False)
        self.parser = build_parser()

    def error(self, message: str) -> None:
        """Print a one-line diagnostic to standard error."""
        self.errors.print(f"✗ {APP_NAME}: {message}", style="bold red", markup=False)

    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        """
        Run one command.

        Args:
            argv: Arguments without the program name

        Returns:
            Exit code: 0 positive finding, 1 negative finding, 2 error
        """
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as e:
            return int(e.code) if isinstance(e.code, int) else int(ExitCode.ERROR)

        debug = bool(getattr(args, "debug", False))
        try:
            settings = configure_settings(
                debug=debug,
                log_level=getattr(args, "log_level", "WARNING"),
                log_file=getattr(args, "log_file", None),
                pretty_json=not getattr(args, "compact", False),
                enable_colors=not getattr(args, "no_color", False),
            )
        except pydantic.ValidationError as e:
            self.error(f"invalid logging options: {e.errors()[0]['msg']}")
            return int(ExitCode.ERROR)
        setup_logging(settings)

        try:
            config = to_run_config(args)
            logger.info("Running %s", config.command.value)
            command = COMMANDS[config.command](console=self.console)
            exit_code = command.execute(config)
            logger.info("Finished with exit code %d", exit_code)
            return exit_code
        except SCToolError as e:
            self.error(str(e))
            if debug:
                traceback.print_exc()
            return int(ExitCode.ERROR)
        except Exception as e:  # noqa: BLE001
            self.error(f"unexpected error: {e}")
            if debug:
                traceback.print_exc()
            return int(ExitCode.ERROR)


def create_app(console: Optional[Console] = None) -> CLIApp:
    """
    Create CLI application instance.

    Returns:
        CLI application
    """
    return CLIApp(console)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv, run the command and return its exit code."""
    return create_app().run(argv)
