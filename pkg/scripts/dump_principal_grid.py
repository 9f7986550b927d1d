#!/usr/bin/env python3
"""Dump the principal-function grid of a shift model to CSV for plotting.

Thin wrapper over `hyposhift grid`; see that subcommand for the flags.
"""
import sys

from hyposhift.cli import main

if __name__ == "__main__":
    sys.exit(main(["grid"] + sys.argv[1:]))
