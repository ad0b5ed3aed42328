"""Window-count scaling on planted worst-shape instances.

Runs the search (or only the planner with --dry-run) for N = p^r q at each
bit size, writes a CSV, and prints the least-squares slope of
log2(windows) against bits next to the 1/(4r) reference.

    python3 scripts/bench_scaling.py --r 2 --bits 32 48 --step 4
    python3 scripts/bench_scaling.py --r 2 --bits 32 64 --step 2 --dry-run
"""

from __future__ import annotations

import argparse
import csv
import math
import statistics
import sys

from rpowdiv.cli import bench_rows


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--r", type=int, default=2)
    ap.add_argument("--bits", type=int, nargs=2, default=(32, 48), metavar=("LO", "HI"))
    ap.add_argument("--step", type=int, default=4)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--dry-run", action="store_true", help="plan only, no lattice work")
    ap.add_argument("--out", default="-", help="CSV path, '-' for stdout")
    args = ap.parse_args(argv)

    rows = []
    for bits, count, ms, N in bench_rows(
        args.r, args.bits[0], args.bits[1], args.step, workers=args.workers, dry_run=args.dry_run
    ):
        rows.append((bits, count, round(ms, 1), N))
        print(f"bits={bits} windows={count} ms={ms:.0f}", file=sys.stderr, flush=True)

    out = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    w = csv.writer(out)
    w.writerow(["bits", "intervals", "ms", "N"])
    w.writerows(rows)
    if out is not sys.stdout:
        out.close()

    if len(rows) >= 2:
        fit = statistics.linear_regression([r[0] for r in rows], [math.log2(r[1]) for r in rows])
        print(f"slope {fit.slope:.4f} (1/4r = {1 / (4 * args.r):.4f})", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
