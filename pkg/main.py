"""Command-line runner for the tropical fan duality toolkit."""

import sys

from tropfan.cli_io import run_cli


def main():
    """Run the requested subcommand and exit with its status code."""
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == '__main__':
    main()
