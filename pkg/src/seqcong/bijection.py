"""Size-preserving maps between frequency congruent partitions, sequentially
congruent partitions and partitions into squares (or higher powers).

A frequency congruent partition has every part ``i`` repeated ``i * e_i``
times. Replacing those ``i * e_i`` copies of ``i`` by ``e_i`` copies of
``i**2`` keeps the size, and the map is undone by reading ``e_i`` back.
Conjugation moves between the frequency congruent and sequentially
congruent classes, so composing the two gives a size-preserving bijection
from sequentially congruent partitions onto partitions into squares.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import isqrt
from typing import Iterable, Mapping

from .congruence import is_sequentially_congruent
from .partition_core import Partition, PartitionError, conjugate, format_frequency


class NotInClassError(PartitionError):
    """A map received a partition outside its domain."""


def integer_root(value: int, power: int) -> int | None:
    """Exact ``power``-th root of ``value``, or None if it is not a perfect power."""
    if value < 0 or power < 1:
        return None
    root = isqrt(value) if power == 2 else round(value ** (1 / power))
    for cand in (root - 1, root, root + 1):
        if cand >= 0 and cand**power == value:
            return cand
    return None


@dataclass(frozen=True)
class SquarePartition:
    """Partition into squares, stored as ``base -> e`` (part ``base**2``
    occurs ``e`` times). Pairs are kept sorted by base."""

    exps: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        items = self.exps.items() if isinstance(self.exps, Mapping) else self.exps
        pairs = tuple(sorted((int(b), int(e)) for b, e in items))
        seen = set()
        for b, e in pairs:
            if b < 1 or e < 1:
                raise PartitionError(f"base {b} with exponent {e}: both must be positive")
            if b in seen:
                raise PartitionError(f"base {b} repeated")
            seen.add(b)
        object.__setattr__(self, "exps", pairs)

    @classmethod
    def from_parts(cls, lam: Iterable[int]) -> "SquarePartition":
        """Build from a partition whose parts are all perfect squares."""
        exps: Counter[int] = Counter()
        for part in lam:
            root = isqrt(part)
            if root * root != part:
                raise NotInClassError(f"part {part} is not a perfect square")
            exps[root] += 1
        return cls(tuple(exps.items()))

    def as_dict(self) -> dict[int, int]:
        return dict(self.exps)

    @property
    def size(self) -> int:
        return sum(b * b * e for b, e in self.exps)

    def parts(self) -> Partition:
        out: list[int] = []
        for b, e in reversed(self.exps):
            out.extend([b * b] * e)
        return Partition._trusted(out)

    def __str__(self) -> str:
        return format_frequency({b * b: e for b, e in self.exps})


@dataclass(frozen=True)
class PowerPartition:
    """Partition in which each ``base**power`` for ``base`` in ``bases``
    occurs exactly ``mult`` times."""

    power: int
    mult: int
    bases: tuple[int, ...] = field(default=())

    def __post_init__(self):
        bases = tuple(sorted(self.bases))
        if self.power < 1:
            raise PartitionError(f"power must be >= 1, got {self.power}")
        if self.mult < 1:
            raise PartitionError(f"mult must be >= 1, got {self.mult}")
        if any(b < 1 for b in bases) or len(set(bases)) != len(bases):
            raise PartitionError(f"bases must be distinct positive integers: {bases}")
        object.__setattr__(self, "bases", bases)

    @property
    def size(self) -> int:
        return self.mult * sum(b**self.power for b in self.bases)

    @classmethod
    def from_parts(cls, lam: Iterable[int], power: int, mult: int) -> "PowerPartition":
        """Build from a partition whose distinct parts are ``power``-th powers
        each occurring exactly ``mult`` times."""
        bases = []
        for part, m in sorted(Counter(lam).items()):
            root = integer_root(part, power)
            if root is None:
                raise NotInClassError(f"part {part} is not a {power}-th power")
            if m != mult:
                raise NotInClassError(f"part {part} occurs {m} times, expected exactly {mult}")
            bases.append(root)
        return cls(power, mult, tuple(bases))

    def parts(self) -> Partition:
        out: list[int] = []
        for b in reversed(self.bases):
            out.extend([b**self.power] * self.mult)
        return Partition._trusted(out)

    def __str__(self) -> str:
        return format_frequency({b**self.power: self.mult for b in self.bases})


def pi_map(lam: Partition) -> SquarePartition:
    """Send ``i^(i*e)`` to ``(i**2)^e`` for each part value ``i``.

    >>> str(pi_map(Partition((3, 3, 3))))
    '9^1'
    """
    exps = []
    for part, m in sorted(Counter(lam).items()):
        if m % part:
            raise NotInClassError(
                f"not frequency congruent: part {part} has multiplicity {m}, not a multiple of {part}"
            )
        exps.append((part, m // part))
    return SquarePartition(tuple(exps))


def pi_inverse(mu: SquarePartition) -> Partition:
    out: list[int] = []
    for b, e in reversed(mu.exps):
        out.extend([b] * (b * e))
    return Partition._trusted(out)


def seq_to_square(lam: Partition) -> SquarePartition:
    if not is_sequentially_congruent(lam):
        raise NotInClassError(f"{tuple(lam)} is not sequentially congruent")
    return pi_map(conjugate(lam))


def square_to_seq(mu: SquarePartition) -> Partition:
    return conjugate(pi_inverse(mu))


def l_stat(mu: SquarePartition) -> int:
    """Weighted frequency ``sum(i * e_i)``; the length of ``pi_inverse(mu)``."""
    return sum(b * e for b, e in mu.exps)


def pi_jk_map(lam: Partition, j: int, k: int) -> PowerPartition:
    """Collapse ``i^(j * i**k)`` to ``j`` copies of ``i**(k+1)``."""
    if j < 1 or k < 0:
        raise ValueError(f"need j >= 1 and k >= 0, got j={j}, k={k}")
    bases = []
    for part, m in sorted(Counter(lam).items()):
        if m != j * part**k:
            raise NotInClassError(f"part {part} has multiplicity {m}, expected {j * part**k}")
        bases.append(part)
    return PowerPartition(k + 1, j, tuple(bases))


def pi_jk_inverse(rho: PowerPartition) -> Partition:
    k = rho.power - 1
    out: list[int] = []
    for b in reversed(rho.bases):
        out.extend([b] * (rho.mult * b**k))
    return Partition._trusted(out)
