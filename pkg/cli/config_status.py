#!/usr/bin/env python3
"""
Config CLI - Show the effective configuration and any validation errors.

Usage:
    python -m cli.config_status
"""

import argparse
import sys

from config import get_config, print_config_status, validate_config
from errors import EXIT_PASS, EXIT_USAGE

HELP = "show configuration status"


def add_arguments(parser: argparse.ArgumentParser):
    pass


def run(args: argparse.Namespace) -> int:
    config = get_config()
    print_config_status(config)

    errors = validate_config(config)
    if errors:
        print("\nConfiguration Errors:")
        for error in errors:
            print(f"  - {error}")
        return EXIT_USAGE

    print("\nConfiguration is valid!")
    return EXIT_PASS


def main(argv=None):
    from gca_cli import cli_run
    sys.exit(cli_run(["config"] + list(sys.argv[1:] if argv is None else argv)))


if __name__ == "__main__":
    main()
