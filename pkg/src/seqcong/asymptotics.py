"""Wright's asymptotic for partitions into squares,

    p_sq(n) ~ B * exp(C * n**(1/3)) / n**(7/6),
    B = (zeta(3/2)**4 / (442368 * pi**7))**(1/6),
    C = (3/2) * ((pi/2) * zeta(3/2)**2)**(1/3),

and a report comparing it (in log scale) with exact counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .counting import p_square_table

DEFAULT_ZETA_TERMS = 10_000


def zeta_partial_sum(s: float, terms: int) -> float:
    """``sum_{n=1}^{terms} n**-s``."""
    return math.fsum(n**-s for n in range(1, terms + 1))


def zeta_three_halves(terms: int = DEFAULT_ZETA_TERMS) -> float:
    """zeta(3/2) by Euler-Maclaurin: direct sum below ``M = terms``, then

        M**(1-s)/(s-1) + M**-s/2 + s/12 * M**(-s-1) - s(s+1)(s+2)/720 * M**(-s-3)

    for the tail starting at ``M``. Absolute error is far below 1e-10 for
    ``terms >= 100``.
    """
    if terms < 2:
        raise ValueError(f"terms must be >= 2, got {terms}")
    s = 1.5
    M = terms
    head = math.fsum(n**-s for n in range(1, M))
    tail = (
        M ** (1 - s) / (s - 1)
        + M**-s / 2
        + s / 12 * M ** (-s - 1)
        - s * (s + 1) * (s + 2) / 720 * M ** (-s - 3)
    )
    return head + tail


@dataclass(frozen=True)
class WrightConstants:
    zeta_3_2: float
    B: float
    C: float


def wright_constants(terms: int = DEFAULT_ZETA_TERMS) -> WrightConstants:
    z = zeta_three_halves(terms)
    B = (z**4 / (442368 * math.pi**7)) ** (1 / 6)
    C = 1.5 * ((math.pi / 2) * z**2) ** (1 / 3)
    return WrightConstants(z, B, C)


def log_wright_estimate(n: int, constants: WrightConstants | None = None) -> float:
    """``log B + C n^(1/3) - (7/6) log n``; safe for any n."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    c = constants or wright_constants()
    return math.log(c.B) + c.C * n ** (1 / 3) - 7 / 6 * math.log(n)


def wright_estimate(n: int, constants: WrightConstants | None = None, *, log: bool = False) -> float:
    """The estimate itself, or its natural log with ``log=True``.

    Returns ``inf`` when the value exceeds double range.
    """
    value = log_wright_estimate(n, constants)
    if log:
        return value
    try:
        return math.exp(value)
    except OverflowError:
        return math.inf


@dataclass(frozen=True)
class EstimateRow:
    n: int
    exact: int
    estimate: float
    log_exact: float
    log_estimate: float
    log_ratio: float


@dataclass(frozen=True)
class EstimateReport:
    constants: WrightConstants
    rows: tuple[EstimateRow, ...] = field(default=())

    def __iter__(self):
        return iter(self.rows)

    def __len__(self):
        return len(self.rows)


def compare_estimate(ns: list[int], constants: WrightConstants | None = None) -> EstimateReport:
    """One row per ``n`` (in the given order) comparing exact counts with the estimate."""
    c = constants or wright_constants()
    if not ns:
        return EstimateReport(c, ())
    if min(ns) < 2:
        # log p_sq(1) = 0 makes the log ratio undefined
        raise ValueError(f"every n must be >= 2, got {min(ns)}")
    table = p_square_table(max(ns))
    rows = []
    for n in ns:
        exact = table[n]
        log_exact = math.log(exact)
        log_est = log_wright_estimate(n, c)
        rows.append(
            EstimateRow(
                n=n,
                exact=exact,
                estimate=wright_estimate(n, c),
                log_exact=log_exact,
                log_estimate=log_est,
                log_ratio=log_est / log_exact,
            )
        )
    return EstimateReport(c, tuple(rows))
