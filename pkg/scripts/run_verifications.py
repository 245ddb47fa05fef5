#!/usr/bin/env python3
"""Run the full identity-verification suite and print the report.

Example:
    python scripts/run_verifications.py
    python scripts/run_verifications.py --check excluded_diagonal_rc --check scaling --seed 7
"""

import sys

from godeaux2.cli import main

if __name__ == "__main__":
    raise SystemExit(main(["verify"] + sys.argv[1:]))
