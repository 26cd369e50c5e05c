"""
Entry point for the leonard command line.

Usage:
    python -m leonard verify tests/fixtures/instances/krawtchouk_d3.json
    leonard decide instance.json --all
"""

import sys


def main() -> int:
    """
    Main entry point.

    Returns:
        Exit code: 0 pass, 1 negative verdict, 2 input error, 3 integrity violation.
    """
    from leonard.cli.app import run

    return run()


if __name__ == "__main__":
    sys.exit(main())
