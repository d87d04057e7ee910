"""
RainbowIndex Command Line Entry Point
Argument parsing, logging setup and container wiring for one CLI run
"""

import sys
from typing import Any, Dict, Optional, Sequence, TextIO

from rainbowindex.infrastructure.config.dependency_container import create_container
from rainbowindex.presentation.cli.cli_commands import build_parser, run_command
from rainbowindex.settings import Settings, get_settings
from rainbowindex.shared.utils.logger_utility import get_logger, setup_logging


def _settings_for(args: Any, base: Settings) -> Settings:
    """Command-line flags override the environment."""
    overrides: Dict[str, Any] = {}
    if args.log_level:
        overrides["log_level"] = args.log_level
    if getattr(args, "budget", None) is not None:
        overrides["node_budget"] = args.budget
    if getattr(args, "workers", None) is not None:
        overrides["sweep_workers"] = args.workers
    return base.model_copy(update=overrides) if overrides else base


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    """Run the CLI and return the process exit code."""
    args = build_parser().parse_args(argv)
    settings = _settings_for(args, get_settings())
    setup_logging(settings.log_level)

    logger = get_logger(__name__)
    logger.info("cli.start", app=settings.app_name, version=settings.app_version, command=args.command)

    container = create_container(settings)
    exit_code = run_command(args, container, out or sys.stdout)

    logger.info("cli.done", command=args.command, exit_code=exit_code)
    return exit_code


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
