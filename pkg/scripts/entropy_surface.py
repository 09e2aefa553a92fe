#!/usr/bin/env python3
"""Critical entropy surface S(L, d) on the full (block size, distance) grid.

Defaults reproduce the L <= 30, d <= 140 sweep (a few minutes single
threaded; set ISING_THREADS to parallelize).  Delegates to the CLI so the
output is byte-reproducible.
"""

import argparse
import sys

from ising_blocks.cli import main as cli_main


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--L-max", type=int, default=30)
    ap.add_argument("--d-max", type=int, default=140)
    ap.add_argument("--output", default="entropy_surface.csv")
    args = ap.parse_args()

    rc = cli_main(
        [
            "surface",
            "--lambda",
            "1",
            "--L-max",
            str(args.L_max),
            "--d-max",
            str(args.d_max),
            "--output",
            args.output,
        ]
    )
    if rc == 0:
        print(f"wrote {args.output}")
    return rc


if __name__ == "__main__":
    sys.exit(main())
