import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Iterable, List, Optional, Tuple

from dotenv import load_dotenv

from stringye.config import Config
from stringye.errors import InvalidConfig, StringyError
from stringye.logger import setup_logging

logger = logging.getLogger(__name__)


def int_list(text: str) -> List[int]:
    """``"5,5,6"`` -> ``[5, 5, 6]``; used as an argparse ``type``."""
    try:
        values = [int(item) for item in text.split(",") if item.strip()]
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from err
    if not values:
        raise argparse.ArgumentTypeError("expected at least one integer")
    return values


def does_file_exist(file_path: str) -> bool:
    file_path = Path(file_path).expanduser().resolve()
    return file_path.exists()


def emit(args, lines: Iterable[str], document: Any) -> None:
    """Print ``document`` as JSON under ``--json``, the text lines otherwise."""
    if getattr(args, "json", False):
        print(json.dumps(document, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def report_error(err: StringyError) -> int:
    print(f"error[{err.code}]: {err}", file=sys.stderr)
    return err.exit_status


def load_settings(args) -> Config:
    if args.env and not does_file_exist(args.env):
        raise InvalidConfig(f"env file '{args.env}' does not exist!")

    if args.config and not does_file_exist(args.config):
        raise InvalidConfig(f"config file '{args.config}' does not exist!")

    if args.env:
        load_dotenv(args.env)

    return Config(args.config)


def run_subcommand(args) -> int:
    """Load env and config, set up logging and call the handler; typed errors become exit statuses."""
    try:
        args.settings = load_settings(args)
        setup_logging(args.log_level or args.settings.log_level, args.settings.log_file)
        logger.debug("running %s", args.command)
        status: Optional[int] = args.func(args)
        return status or 0
    except StringyError as err:
        return report_error(err)


def int_pair(text: str) -> Tuple[int, int]:
    values = int_list(text)
    if len(values) != 2:
        raise argparse.ArgumentTypeError(f"expected two comma-separated integers, got {text!r}")
    return values[0], values[1]


def nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from err
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value
