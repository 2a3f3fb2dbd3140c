"""Print the three brute-force class counts next to the square-partition table.

    python scripts/count_bridge.py --max-n 40
"""

import argparse
import math
import time
from dataclasses import dataclass

from seqcong.congruence import is_frequency_congruent, is_sequentially_congruent
from seqcong.counting import p_square_table
from seqcong.enumeration import partitions_of


@dataclass
class Config:
    max_n: int = 40


def main(cfg: Config) -> None:
    table = p_square_table(cfg.max_n)
    start = time.perf_counter()
    print(f"{'n':>3} {'seq':>5} {'freq':>5} {'square':>6} {'table':>6}")
    for n in range(cfg.max_n + 1):
        seq = freq = sq = 0
        for lam in partitions_of(n):
            seq += is_sequentially_congruent(lam)
            freq += is_frequency_congruent(lam)
            sq += all(math.isqrt(x) ** 2 == x for x in lam)
        flag = "" if seq == freq == sq == table[n] else "  MISMATCH"
        print(f"{n:>3} {seq:>5} {freq:>5} {sq:>6} {table[n]:>6}{flag}")
    print(f"# {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    main(Config(max_n=ap.parse_args().max_n))
