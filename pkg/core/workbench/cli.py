"""Single entry point over the workbench management commands.

`run(argv)` returns the exit status instead of exiting, so scripts and tests can drive the
workbench in-process.
"""

import os
import sys

from .base import EXIT_USAGE

SUBCOMMANDS = ("solve", "verify", "params", "bounds", "classify", "construct", "fuzz")


def run(argv: list[str]) -> int:
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.django.base")
    from django.core.management import execute_from_command_line

    if not argv or argv[0] not in SUBCOMMANDS:
        sys.stderr.write(f"usage: rdrd {{{','.join(SUBCOMMANDS)}}} ...\n")
        return EXIT_USAGE
    try:
        execute_from_command_line(["rdrd", *argv])
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
