"""Generators for every partition class used here.

Each class has two routes: ``method="filter"`` runs the defining predicate
over :func:`partitions_of` (the brute-force oracle), ``method="fast"`` builds
members directly through the bijections. Only set equality between the two
routes is guaranteed, not order.

Bound used by the largest-part oracle: if ``lam`` is sequentially congruent
with ``r`` parts then ``lam[r] = 0 (mod r)`` and ``lam[r] >= 1``, so
``lam[r] >= r``; hence ``r <= lam[r] <= lam[1] = n``, and every member with
largest part ``n`` fits in an ``n x n`` box (size at most ``n**2``).

Direct parameterisation of the sequentially congruent class (names local to
this module): writing ``lam[i] - lam[i+1] = d_i * i`` and ``lam[r] = m * r``,
the size is ``m * r**2 + sum(d_i * i**2)``, which is the square partition
with ``e_i = d_i`` (i < r) and ``e_r = m``.
"""

from __future__ import annotations

import random
from collections import Counter
from functools import lru_cache
from math import isqrt
from typing import Callable, Iterator, Sequence

from .bijection import (
    PowerPartition,
    SquarePartition,
    integer_root,
    l_stat,
    pi_jk_inverse,
    square_to_seq,
)
from .congruence import is_frequency_congruent, is_member_s_jk, is_sequentially_congruent
from .partition_core import Partition, conjugate

_METHODS = ("fast", "filter")


def _check_method(method: str) -> None:
    if method not in _METHODS:
        raise ValueError(f"method must be one of {_METHODS}, got {method!r}")


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of ``n`` in descending lexicographic order.

    Zoghbi-Stojmenovic ZS1: ``x[1:m+1]`` holds the current partition and
    ``h`` indexes its last part larger than 1.

    >>> [tuple(p) for p in partitions_of(4)]
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        yield Partition._trusted(())
        return
    trusted = Partition._trusted
    x = [1] * (n + 1)
    x[1] = n
    m = h = 1
    yield trusted(x[1:2])
    while x[1] != 1:
        if x[h] == 2:
            m += 1
            x[h] = 1
            h -= 1
        else:
            r = x[h] - 1
            t = m - h + 1
            x[h] = r
            while t >= r:
                h += 1
                x[h] = r
                t -= r
            if t == 0:
                m = h
            else:
                m = h + 1
                if t > 1:
                    h += 1
                    x[h] = t
        yield trusted(x[1 : m + 1])


def partitions_in_box(max_part: int, max_len: int) -> Iterator[Partition]:
    """Every partition with parts <= ``max_part`` and at most ``max_len`` parts."""

    def rec(cap: int, slots: int) -> Iterator[tuple[int, ...]]:
        yield ()
        if slots == 0:
            return
        for first in range(cap, 0, -1):
            for rest in rec(first, slots - 1):
                yield (first,) + rest

    for parts in rec(max_part, max_len):
        yield Partition._trusted(parts)


def filter_partitions(n: int, pred: Callable[[Partition], bool]) -> Iterator[Partition]:
    return (lam for lam in partitions_of(n) if pred(lam))


def square_partitions_of(n: int) -> Iterator[SquarePartition]:
    """Every solution of ``sum(i**2 * e_i) = n``."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")

    def rec(rest: int, top: int) -> Iterator[tuple[tuple[int, int], ...]]:
        if rest == 0:
            yield ()
            return
        if top == 1:
            yield ((1, rest),)
            return
        sq = top * top
        for e in range(rest // sq, -1, -1):
            for tail in rec(rest - e * sq, top - 1):
                yield tail + ((top, e),) if e else tail

    for exps in rec(n, max(isqrt(n), 1)):
        yield SquarePartition(exps)


def seq_cong_partitions_of(n: int, method: str = "fast") -> Iterator[Partition]:
    _check_method(method)
    if method == "filter":
        return filter_partitions(n, is_sequentially_congruent)
    return (square_to_seq(mu) for mu in square_partitions_of(n))


def freq_cong_partitions_of(n: int, method: str = "fast") -> Iterator[Partition]:
    _check_method(method)
    if method == "filter":
        return filter_partitions(n, is_frequency_congruent)
    return (conjugate(lam) for lam in seq_cong_partitions_of(n, "fast"))


def square_partitions_with_l(n: int, method: str = "fast") -> Iterator[SquarePartition]:
    """Square partitions ``mu`` with ``l_stat(mu) == n``.

    The fast route reads ``e_i`` off as the multiplicity of ``i`` in each
    partition of ``n``; the filter route scans all square partitions of
    size at most ``n**2`` (``sum(i**2 e_i) <= n * sum(i e_i)``).
    """
    _check_method(method)
    if method == "filter":
        return (
            mu
            for size in range(n * n + 1)
            for mu in square_partitions_of(size)
            if l_stat(mu) == n
        )
    return (SquarePartition(tuple(Counter(lam).items())) for lam in partitions_of(n))


def seq_cong_with_largest_part(n: int, method: str = "fast") -> Iterator[Partition]:
    """Sequentially congruent partitions whose largest part is ``n``."""
    _check_method(method)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if method == "filter":
        return (
            Partition._trusted((n,) + tuple(rest))
            for rest in partitions_in_box(n, n - 1)
            if is_sequentially_congruent(Partition._trusted((n,) + tuple(rest)))
        )
    return (square_to_seq(mu) for mu in square_partitions_with_l(n, "fast"))


def _base_sets(n: int, j: int, power: int) -> Iterator[tuple[int, ...]]:
    """Sets A of distinct bases with ``j * sum(i**power for i in A) == n``."""
    if n % j:
        return
    target = n // j

    def rec(rest: int, top: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for b in range(top, 0, -1):
            val = b**power
            if val > rest:
                continue
            for tail in rec(rest - val, b - 1):
                yield tail + (b,)

    top = 1
    while (top + 1) ** power <= target:
        top += 1
    yield from rec(target, top)


def _check_jk(n: int, j: int, k: int) -> None:
    if n < 0 or j < 1 or k < 0:
        raise ValueError(f"need n >= 0, j >= 1, k >= 0; got n={n}, j={j}, k={k}")


def s_jk_partitions_of(
    n: int, j: int, k: int, method: str = "fast", *, allow_gaps: bool = False
) -> Iterator[Partition]:
    """Members of S(j, k) of size ``n``; see :func:`congruence.is_member_s_jk`."""
    _check_method(method)
    _check_jk(n, j, k)
    if method == "filter":
        return filter_partitions(n, lambda lam: is_member_s_jk(lam, j, k, allow_gaps=allow_gaps))
    sets = _base_sets(n, j, k + 1)
    if not allow_gaps:
        # strict differences force the conjugate to use every value 1..r
        sets = (A for A in sets if A == tuple(range(1, len(A) + 1)))
    return (conjugate(pi_jk_inverse(PowerPartition(k + 1, j, A))) for A in sets)


def _is_exact_j_power_partition(lam: Partition, j: int, power: int) -> bool:
    return all(m == j and integer_root(part, power) is not None for part, m in Counter(lam).items())


def power_partitions_exact_j(n: int, j: int, k: int, method: str = "fast") -> Iterator[PowerPartition]:
    """Partitions of ``n`` into ``(k+1)``-th powers, each distinct part exactly ``j`` times."""
    _check_method(method)
    _check_jk(n, j, k)
    power = k + 1
    if method == "filter":
        return (
            PowerPartition.from_parts(lam, power, j)
            for lam in filter_partitions(n, lambda lam: _is_exact_j_power_partition(lam, j, power))
        )
    return (PowerPartition(power, j, A) for A in _base_sets(n, j, power))


# -- uniform random sampling ---------------------------------------------------


@lru_cache(maxsize=64)
def _restricted_table(n: int, allowed: tuple[int, ...]) -> list[list[int]]:
    # table[i][m] = partitions of m with parts from allowed[:i]
    table = [[1] + [0] * n]
    for a in allowed:
        row = list(table[-1])
        for m in range(a, n + 1):
            row[m] += row[m - a]
        table.append(row)
    return table


def random_partition(
    n: int, rng: random.Random, allowed_parts: Sequence[int] | None = None
) -> Partition:
    """Uniformly random partition of ``n`` with parts from ``allowed_parts``
    (default: all positive integers). Raises if no such partition exists."""
    allowed = tuple(sorted(set(allowed_parts))) if allowed_parts is not None else tuple(range(1, n + 1))
    allowed = tuple(a for a in allowed if a <= n)
    table = _restricted_table(n, allowed)
    if table[-1][n] == 0:
        raise ValueError(f"no partition of {n} with parts in {allowed_parts}")
    parts = []
    i, m = len(allowed), n
    while m:
        a = allowed[i - 1]
        if a <= m and rng.randrange(table[i][m]) < table[i][m - a]:
            parts.append(a)
            m -= a
        else:
            i -= 1
    return Partition._trusted(parts)
