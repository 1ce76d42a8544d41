#!/usr/bin/env python
"""Workbench entry point: `./manage.py solve C~`, `./manage.py fuzz --mode trees --count 50`."""

from core.workbench.cli import main

if __name__ == "__main__":
    main()
