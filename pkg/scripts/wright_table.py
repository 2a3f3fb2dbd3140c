"""Compare exact partitions-into-squares counts with Wright's estimate.

    python scripts/wright_table.py --ns 10 100 1000 10000 100000
"""

import argparse
from dataclasses import dataclass, field

from seqcong.asymptotics import compare_estimate, wright_constants


@dataclass
class Config:
    ns: list[int] = field(default_factory=lambda: [10, 100, 1000, 10_000])
    zeta_terms: int = 10_000


def main(cfg: Config) -> None:
    c = wright_constants(cfg.zeta_terms)
    print(f"zeta(3/2)={c.zeta_3_2!r}  B={c.B!r}  C={c.C!r}")
    print(f"{'n':>7} {'digits':>7} {'log exact':>12} {'log est':>12} {'log ratio':>12} {'ratio':>10}")
    for row in compare_estimate(cfg.ns, c):
        ratio = row.estimate / row.exact if row.estimate != float("inf") else float("nan")
        print(
            f"{row.n:>7} {len(str(row.exact)):>7} {row.log_exact:>12.6f} "
            f"{row.log_estimate:>12.6f} {row.log_ratio:>12.8f} {ratio:>10.6f}"
        )


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--ns", type=int, nargs="+", default=Config().ns)
    ap.add_argument("--zeta-terms", type=int, default=Config.zeta_terms)
    args = ap.parse_args()
    main(Config(ns=args.ns, zeta_terms=args.zeta_terms))
