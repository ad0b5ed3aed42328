"""Per-range window counts of one plan, with theta and the 6 N^(theta(1-theta)/r) + 1 bound.

    python3 scripts/window_profile.py 0xfffffffffffffff1 2
"""

from __future__ import annotations

import math
import sys

from rpowdiv.cli import parse_int
from rpowdiv.scheduler import plan


def main(argv: list[str]) -> int:
    if len(argv) != 2:
        print(__doc__.strip(), file=sys.stderr)
        return 1
    N, r = parse_int(argv[0], "N"), parse_int(argv[1], "r")
    pl = plan(N, r)
    lg = math.log2(N)
    print(f"k={pl.k} head<=2^{pl.k} root={pl.root} windows={pl.interval_count}")
    print("T,T_end,d,m,H,windows,theta,bound")
    for rs in pl.ranges:
        theta = r * math.log2(rs.T) / lg
        bound = 6 * 2 ** (lg * theta * (1 - theta) / r) + 1
        p = rs.params
        print(f"{rs.T},{rs.T_end},{p.d},{p.m},{p.H},{len(rs.windows)},{theta:.4f},{bound:.1f}")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
