"""Count S(j, k) members under the strict and the gap reading against the
power-partition side, for a grid of (j, k).

    python scripts/s_jk_readings.py --max-n 40
"""

import argparse

from seqcong.enumeration import power_partitions_exact_j, s_jk_partitions_of

GRID = [(j, k) for j in (1, 2, 3) for k in (1, 2)]


def count(it):
    return sum(1 for _ in it)


def main(max_n: int) -> None:
    for j, k in GRID:
        bad = []
        for n in range(max_n + 1):
            strict = count(s_jk_partitions_of(n, j, k, "filter"))
            gaps = count(s_jk_partitions_of(n, j, k, "filter", allow_gaps=True))
            powers = count(power_partitions_exact_j(n, j, k, "filter"))
            assert gaps == powers, (j, k, n)
            if strict != powers:
                bad.append(f"{n}:{strict}/{powers}")
        print(f"j={j} k={k}: strict reading disagrees at {len(bad)} sizes  {' '.join(bad[:8])}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=40)
    main(ap.parse_args().max_n)
