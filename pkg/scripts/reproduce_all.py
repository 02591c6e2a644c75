#!/usr/bin/env python3
"""Regenerate every curve and report into an output directory.

Usage: python scripts/reproduce_all.py [--outdir results] [--scenario FILE]
"""

import argparse
import pathlib
import sys

from mlsfr import cli

OUTPUTS = {
    "fig5": "gamma_sweep.csv",
    "fig6": "level_curves.csv",
    "table4": "allocation.json",
    "design": "design.json",
    "alloc": "greedy_allocation.json",
    "pairing": "pairing.json",
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", default="results")
    parser.add_argument("--scenario", default=None)
    args = parser.parse_args()
    outdir = pathlib.Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for command, filename in OUTPUTS.items():
        argv = [command, "--out", str(outdir / filename)]
        if args.scenario:
            argv += ["--scenario", args.scenario]
        code = cli.main(argv)
        if code != 0:
            return code
        print(f"wrote {outdir / filename}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
