"""Membership predicates for the sequentially congruent, frequency congruent
and S(j, k) partition classes.

The empty partition belongs to every class (vacuous conditions).
"""

from __future__ import annotations

from collections import Counter

from .partition_core import Partition


def is_sequentially_congruent(lam: Partition) -> bool:
    """``lam[i] = lam[i+1] (mod i)`` for 1 <= i < r and ``lam[r] = 0 (mod r)``.

    >>> is_sequentially_congruent(Partition((20, 17, 15, 9, 5)))
    True
    >>> is_sequentially_congruent(Partition((1, 1)))
    False
    """
    r = len(lam)
    if r == 0:
        return True
    if lam[-1] % r:
        return False
    for i in range(1, r):
        if (lam[i - 1] - lam[i]) % i:
            return False
    return True


def is_frequency_congruent(lam: Partition) -> bool:
    """Every part value divides its own multiplicity."""
    return all(m % part == 0 for part, m in Counter(lam).items())


def is_member_s_jk(lam: Partition, j: int, k: int, *, allow_gaps: bool = False) -> bool:
    """Membership in S(j, k).

    Strict form: ``lam[i] - lam[i+1] == j * i**k`` for 1 <= i < r and
    ``lam[r] == j * r**k``.  With ``allow_gaps`` a consecutive difference may
    also be 0, i.e. the conjugate has multiplicity ``j * i**k`` on each part
    value ``i`` it contains and zero elsewhere; this is the class the
    power-partition bijection actually covers (the strict form forces the
    conjugate to contain every value ``1..r``).
    """
    if j < 1:
        raise ValueError(f"j must be a positive integer, got {j}")
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    r = len(lam)
    if r == 0:
        return True
    if lam[-1] != j * r**k:
        return False
    for i in range(1, r):
        diff = lam[i - 1] - lam[i]
        if diff != j * i**k and not (allow_gaps and diff == 0):
            return False
    return True
