"""Canonical integer partitions, frequency notation and conjugation.

A :class:`Partition` is a tuple of positive integers in weakly decreasing
order. Frequency notation is a plain ``dict`` mapping part value to its
(positive) multiplicity.

The text grammar shared by the CLI and the test fixtures has two forms:

* parts form: ``26,19,13,13,5``
* frequency form: ``1^7 2^6 4^8 5^5`` (a bare ``base`` means ``base^1``)
"""

from __future__ import annotations

import re
from collections import Counter
from typing import Iterable, Mapping

FrequencyRepr = dict  # part value -> multiplicity, zero entries never stored


class PartitionError(ValueError):
    """Invalid partition data (nonpositive part, bad multiplicity, ...)."""


class PartitionSyntaxError(PartitionError):
    """Malformed partition literal; ``offset`` is the 0-based character index."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class Partition(tuple):
    """Weakly decreasing tuple of positive parts.

    Construction validates canonical form; use :func:`make_partition` to
    sort arbitrary input.

    >>> Partition((3, 1))
    Partition(3, 1)
    >>> Partition(()).size
    0
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        self = tuple.__new__(cls, parts)
        prev = None
        for idx, x in enumerate(self):
            if not isinstance(x, int) or x < 1:
                raise PartitionError(f"part #{idx} is {x!r}; parts must be positive integers")
            if prev is not None and x > prev:
                raise PartitionError(f"parts not weakly decreasing at index {idx}: {prev} < {x}")
            prev = x
        return self

    @classmethod
    def _trusted(cls, parts: Iterable[int]) -> "Partition":
        # skip validation; callers guarantee canonical form
        return tuple.__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition{tuple.__repr__(self)}" if len(self) != 1 else f"Partition({self[0]})"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def largest_part(self) -> int:
        return self[0] if self else 0


def make_partition(values: Iterable[int]) -> Partition:
    """Sort ``values`` into canonical weakly decreasing order."""
    values = list(values)
    for idx, x in enumerate(values):
        if isinstance(x, bool) or not isinstance(x, int) or x < 1:
            raise PartitionError(f"entry #{idx} is {x!r}; parts must be positive integers")
    return Partition._trusted(sorted(values, reverse=True))


def size(lam: Partition) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return len(lam)


def largest_part(lam: Partition) -> int:
    return lam[0] if lam else 0


def to_frequency(lam: Partition) -> FrequencyRepr:
    return dict(Counter(lam))


def from_frequency(freq: Mapping[int, int]) -> Partition:
    parts: list[int] = []
    for base in sorted(freq, reverse=True):
        mult = freq[base]
        if isinstance(base, bool) or not isinstance(base, int) or base < 1:
            raise PartitionError(f"base {base!r} must be a positive integer")
        if isinstance(mult, bool) or not isinstance(mult, int) or mult < 1:
            raise PartitionError(f"multiplicity of {base} is {mult!r}; must be a positive integer")
        parts.extend([base] * mult)
    return Partition._trusted(parts)


def conjugate(lam: Partition) -> Partition:
    """Transpose the Young diagram: ``lam*[j] = #{i : lam[i] > j}``."""
    if not lam:
        return Partition._trusted(())
    out = []
    r = len(lam)
    # walk rows bottom-up; growing from row i adds columns of height i+1
    prev = 0
    for i in range(r - 1, -1, -1):
        part = lam[i]
        if part > prev:
            out.extend([i + 1] * (part - prev))
            prev = part
    return Partition._trusted(out)


# -- text grammar -----------------------------------------------------------

_PARTS_RE = re.compile(r"\s*(-?\d+)\s*")
_TOKEN_RE = re.compile(r"(-?\d+)(?:\^(-?\d+))?")


def parse_partition(text: str) -> Partition:
    """Parse either the parts form or the frequency form.

    >>> parse_partition("26,19,13,13,5") == parse_partition("5 13^2 19 26")
    True
    """
    stripped = text.strip()
    lead = len(text) - len(text.lstrip())
    if not stripped:
        return Partition._trusted(())
    if "," in stripped and "^" in stripped:
        raise PartitionSyntaxError("cannot mix ',' and '^' forms", lead + stripped.index("^"))
    if "^" in stripped or len(stripped.split()) > 1:
        return _parse_frequency_form(text)
    return _parse_parts_form(text)


def _parse_parts_form(text: str) -> Partition:
    values = []
    pos = 0
    for chunk in text.split(","):
        m = _PARTS_RE.fullmatch(chunk)
        if m is None:
            bad = len(chunk) - len(chunk.lstrip())
            raise PartitionSyntaxError(f"expected an integer, got {chunk.strip()!r}", pos + bad)
        value = int(m.group(1))
        if value < 1:
            raise PartitionSyntaxError(f"part {value} is not positive", pos + m.start(1))
        values.append(value)
        pos += len(chunk) + 1
    return make_partition(values)


def _parse_frequency_form(text: str) -> Partition:
    freq: dict[int, int] = {}
    for m in re.finditer(r"\S+", text):
        tok = _TOKEN_RE.fullmatch(m.group())
        if tok is None:
            raise PartitionSyntaxError(f"bad token {m.group()!r}", m.start())
        base = int(tok.group(1))
        mult = int(tok.group(2)) if tok.group(2) is not None else 1
        if base < 1:
            raise PartitionSyntaxError(f"base {base} is not positive", m.start())
        if mult < 1:
            raise PartitionSyntaxError(f"multiplicity {mult} is not positive", m.start() + tok.start(2))
        freq[base] = freq.get(base, 0) + mult
    return from_frequency(freq)


def format_frequency(freq: Mapping[int, int]) -> str:
    return " ".join(f"{b}^{m}" for b, m in sorted(freq.items()))


def format_partition(lam: Partition, style: str = "freq") -> str:
    """Frequency form with bases ascending (default) or parts form."""
    if style == "parts":
        return ",".join(map(str, lam))
    if style != "freq":
        raise ValueError(f"unknown style {style!r}")
    return format_frequency(to_frequency(lam))
