# !/usr/bin/env python
# -*- coding: utf-8 -*-

"""Run the twisted-cohomology command-line tool."""

import sys

from .twisted_cohomology import TwistedCohomology


def run(argv=None):
    """Run a command and exit with its status.

    * 0 on success,
    * 1 when a mathematical precondition fails or 'verify' finds a failure,
    * 2 for errors in the input.
    """
    tool = TwistedCohomology()
    sys.exit(tool.run(argv))


if __name__ == "__main__":
    run()
