#!/usr/bin/env python
"""Command-line entry point: python manage.py <command> --config run.toml"""

import argparse
import json
import logging
import logging.config
from pathlib import Path
import sys

from _library.exceptions import LabError
from apps.experiments.functions.loader import load_config
from apps.experiments.models.choices import CommandName
from config.lab.logging import LoggingSettings
from routes.commands import commandpatterns

logger = logging.getLogger("routes.manage")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qogp-lab", description="Quantum overlap gap property experiments")
    parser.add_argument("command", choices=[command.value for command in CommandName])
    parser.add_argument("--config", required=True, type=Path, help="TOML run document")
    parser.add_argument("--seed", type=int, help="Master seed, overrides the document")
    parser.add_argument("--threads", type=int, help="Worker threads; results do not depend on it")
    parser.add_argument("--out", type=Path, help="Output directory (default QOGP_OUTPUT_DIR or ./output)")
    parser.add_argument("--dense-cap", type=int, help="Largest n for dense matrices in this run")
    parser.add_argument("--log-level", default="INFO", choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"])
    return parser


def main(argv: list[str] | None = None) -> int:
    """
    Exit 0 on any completed run (infeasible or violated results included),
    1 on an execution error, 2 on bad arguments (raised by argparse).
    """
    args = build_parser().parse_args(argv)
    logging.config.dictConfig(LoggingSettings(LEVEL=args.log_level).LOGGING)

    overrides = {"seed": args.seed, "threads": args.threads, "output_dir": args.out, "dense_cap": args.dense_cap}
    try:
        config = load_config(args.config, args.command, overrides)
        logger.info(f"INFO:-------->> Running {config.command.value} with seed {config.seed}")
        summary = commandpatterns[config.command](config)
    except LabError as error:
        logger.error(f"ERROR:-------->> {args.command} failed: {error}")
        return 1

    logger.info(f"INFO:-------->> {config.command.value} finished")
    print(json.dumps(summary, default=str, sort_keys=True))
    return 0


if __name__ == "__main__":
    sys.exit(main())
