#!/usr/bin/env python3
"""Run the derivation pipeline for one matrix case and write the artifacts.

Example:
    python scripts/run_pipeline.py --alpha 1 --c 1 --out out/alpha_1_1
"""

import sys

from godeaux2.cli import main

if __name__ == "__main__":
    raise SystemExit(main(["pipeline"] + sys.argv[1:]))
