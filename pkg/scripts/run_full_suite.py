#!/usr/bin/env python3
"""Run every check suite and write reports to ./reports (or a given dir).

Usage: python scripts/run_full_suite.py [OUT_DIR] [SEED]
"""

import sys

from spreadlab.cli import main

if __name__ == "__main__":
    out = sys.argv[1] if len(sys.argv) > 1 else "reports"
    seed = sys.argv[2] if len(sys.argv) > 2 else "7"
    code = main(["all", "--seed", seed, "--format", "json", "--out", out])
    print(f"reports written to {out}/ (exit {code})")
    raise SystemExit(code)
