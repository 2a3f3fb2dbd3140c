"""Exact counting tables (Python ints, no floats).

``p_table`` uses Euler's pentagonal recurrence
``p(n) = sum_{g>=1} (-1)**(g+1) * (p(n - g(3g-1)/2) + p(n - g(3g+1)/2))``.
``p_square_table`` is the restricted-parts knapsack over ``1, 4, 9, ...``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .enumeration import seq_cong_partitions_of


@dataclass(frozen=True)
class CoeffSeries:
    """Power series in ``q`` truncated after degree ``len(coeffs) - 1``."""

    coeffs: tuple[int, ...]

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def p_table(N: int) -> list[int]:
    """``[p(0), ..., p(N)]``.

    >>> p_table(5)
    [1, 1, 2, 3, 5, 7]
    """
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    return list(_p_table_cached(N))


@lru_cache(maxsize=8)
def _p_table_cached(N: int) -> tuple[int, ...]:
    p = [0] * (N + 1)
    p[0] = 1
    # generalized pentagonal offsets with signs, ascending
    offsets = []
    g = 1
    while True:
        a = g * (3 * g - 1) // 2
        if a > N:
            break
        sign = 1 if g % 2 else -1
        offsets.append((a, sign))
        b = a + g
        if b <= N:
            offsets.append((b, sign))
        g += 1
    for n in range(1, N + 1):
        total = 0
        for off, sign in offsets:
            if off > n:
                break
            if sign > 0:
                total += p[n - off]
            else:
                total -= p[n - off]
        p[n] = total
    return tuple(p)


def p_square_table(N: int) -> list[int]:
    """Number of partitions of ``0..N`` into perfect squares."""
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    return list(_p_square_cached(N))


@lru_cache(maxsize=8)
def _p_square_cached(N: int) -> tuple[int, ...]:
    table = [1] + [0] * N
    for b in range(1, isqrt(N) + 1):
        sq = b * b
        for m in range(sq, N + 1):
            table[m] += table[m - sq]
    return tuple(table)


def p_seq_cong(n: int) -> int:
    """Sequentially congruent partitions of ``n``, read from the square table."""
    return p_square_table(n)[n]


def p_seq_cong_oracle(n: int) -> int:
    """Brute-force count: filter every partition of ``n`` by the definition."""
    return sum(1 for _ in seq_cong_partitions_of(n, "filter"))


def product_coeffs(K: int, N: int) -> CoeffSeries:
    """Coefficients of ``prod_{k=1..K} sum_{j>=0} q**(j*k)`` up to ``q**N``.

    Each factor has coefficient sequence ``a[i] = 1 if k divides i else 0``
    and is folded in by a plain Cauchy product.
    """
    if K < 1 or N < 0:
        raise ValueError(f"need K >= 1 and N >= 0, got K={K}, N={N}")
    if K < N:
        raise ValueError(f"K={K} < N={N}: factors k in (K, N] would be missing")
    acc = [1] + [0] * N
    for k in range(1, K + 1):
        a = [1 if i % k == 0 else 0 for i in range(N + 1)]
        acc = [sum(a[i] * acc[n - i] for i in range(n + 1)) for n in range(N + 1)]
    return CoeffSeries(tuple(acc))
