import random
from collections import Counter
from itertools import product

import pytest

from seqcong.bijection import PowerPartition, SquarePartition, l_stat, pi_jk_map
from seqcong.counting import p_table
from seqcong.enumeration import (
    freq_cong_partitions_of,
    partitions_in_box,
    partitions_of,
    power_partitions_exact_j,
    random_partition,
    s_jk_partitions_of,
    seq_cong_partitions_of,
    seq_cong_with_largest_part,
    square_partitions_of,
    square_partitions_with_l,
)
from seqcong.partition_core import Partition, conjugate


def naive_partitions(n, cap=None):
    cap = n if cap is None else cap
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in naive_partitions(n - first, first):
            yield (first,) + rest


def as_set(stream):
    items = list(stream)
    out = set(items)
    assert len(out) == len(items), "duplicates in stream"
    return out


def test_partitions_of_small():
    assert list(partitions_of(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(partitions_of(0)) == [()]
    assert list(partitions_of(1)) == [(1,)]
    with pytest.raises(ValueError):
        list(partitions_of(-1))


@pytest.mark.parametrize("n", range(0, 23))
def test_partitions_of_descending_lex_and_complete(n):
    got = list(partitions_of(n))
    assert got == sorted(got, reverse=True)
    assert got == list(naive_partitions(n))
    assert all(isinstance(p, Partition) for p in got)


def test_partitions_in_box():
    box = as_set(partitions_in_box(3, 2))
    assert box == {p for m in range(7) for p in naive_partitions(m) if len(p) <= 2 and (not p or p[0] <= 3)}


def test_class_examples():
    assert as_set(seq_cong_partitions_of(4, "filter")) == {(4,), (2, 2)}
    assert as_set(seq_cong_partitions_of(2, "filter")) == {(2,)}
    assert as_set(seq_cong_partitions_of(0, "filter")) == {()}
    assert as_set(freq_cong_partitions_of(4, "filter")) == {(2, 2), (1, 1, 1, 1)}
    # (3) has m_3 = 1, not a multiple of 3
    assert as_set(freq_cong_partitions_of(3, "filter")) == {(1, 1, 1)}
    assert as_set(freq_cong_partitions_of(0, "filter")) == {()}


def test_square_partitions_examples():
    assert as_set(square_partitions_of(4)) == {SquarePartition({2: 1}), SquarePartition({1: 4})}
    assert as_set(square_partitions_of(7)) == {SquarePartition({1: 3, 2: 1}), SquarePartition({1: 7})}
    assert as_set(square_partitions_of(0)) == {SquarePartition()}


def brute_square_solutions(n):
    bases = [b for b in range(1, n + 1) if b * b <= n]
    out = set()
    for es in product(*[range(n // (b * b) + 1) for b in bases]):
        if sum(e * b * b for e, b in zip(es, bases)) == n:
            out.add(SquarePartition({b: e for b, e in zip(bases, es) if e}))
    return out


@pytest.mark.parametrize("n", range(0, 31))
def test_square_partitions_match_brute_force(n):
    assert as_set(square_partitions_of(n)) == brute_square_solutions(n)


def test_square_partitions_with_l_examples():
    assert as_set(square_partitions_with_l(2)) == {SquarePartition({1: 2}), SquarePartition({2: 1})}
    assert as_set(square_partitions_with_l(1)) == {SquarePartition({1: 1})}
    assert len(as_set(square_partitions_with_l(4))) == 5


@pytest.mark.parametrize("n", range(0, 9))
def test_square_partitions_with_l_routes_agree(n):
    fast = as_set(square_partitions_with_l(n, "fast"))
    assert fast == as_set(square_partitions_with_l(n, "filter"))
    assert all(l_stat(mu) == n for mu in fast)


def test_largest_part_examples():
    assert as_set(seq_cong_with_largest_part(2, "filter")) == {(2,), (2, 2)}
    assert as_set(seq_cong_with_largest_part(1, "filter")) == {(1,)}
    assert len(as_set(seq_cong_with_largest_part(4, "fast"))) == 5
    with pytest.raises(ValueError):
        list(seq_cong_with_largest_part(0))


@pytest.mark.parametrize("n", range(1, 9))
def test_largest_part_routes_agree(n):
    assert as_set(seq_cong_with_largest_part(n, "fast")) == as_set(seq_cong_with_largest_part(n, "filter"))


@pytest.mark.parametrize("n", range(0, 41))
def test_class_routes_agree(n):
    assert as_set(seq_cong_partitions_of(n, "fast")) == as_set(seq_cong_partitions_of(n, "filter"))
    assert as_set(freq_cong_partitions_of(n, "fast")) == as_set(freq_cong_partitions_of(n, "filter"))


def test_s_jk_examples():
    assert as_set(s_jk_partitions_of(10, 2, 1, "filter")) == {(6, 4)}
    assert as_set(power_partitions_exact_j(10, 2, 1, "filter")) == {PowerPartition(2, 2, (1, 2))}
    assert as_set(s_jk_partitions_of(0, 2, 1, "filter")) == {()}
    assert as_set(power_partitions_exact_j(0, 2, 1, "filter")) == {PowerPartition(2, 2, ())}
    # single base 1: the one-part member (j) of S(3, 2)
    assert as_set(s_jk_partitions_of(3, 3, 2, "filter")) == {(3,)}
    assert as_set(power_partitions_exact_j(3, 3, 2, "filter")) == {PowerPartition(3, 3, (1,))}


@pytest.mark.parametrize("j, k", [(1, 0), (1, 1), (2, 1), (3, 1), (1, 2), (2, 2), (3, 2)])
def test_s_jk_routes_agree(j, k):
    for n in range(0, 31):
        for gaps in (False, True):
            fast = as_set(s_jk_partitions_of(n, j, k, "fast", allow_gaps=gaps))
            assert fast == as_set(s_jk_partitions_of(n, j, k, "filter", allow_gaps=gaps))
        powers = as_set(power_partitions_exact_j(n, j, k, "fast"))
        assert powers == as_set(power_partitions_exact_j(n, j, k, "filter"))
        # the gap reading is exactly the preimage of the power side
        assert {pi_jk_map(conjugate(lam), j, k) for lam in fast} == powers


def test_bad_method():
    with pytest.raises(ValueError):
        list(seq_cong_partitions_of(3, "magic"))


def test_random_partition_is_uniform(rng):
    n = 6
    counts = Counter(random_partition(n, rng) for _ in range(22_000))
    assert set(counts) == set(partitions_of(n))
    expected = 22_000 / p_table(n)[n]
    # chi-square with 10 degrees of freedom; 0.999 quantile is 29.6
    chi2 = sum((c - expected) ** 2 / expected for c in counts.values())
    assert chi2 < 29.6


def test_random_partition_restricted(rng):
    for _ in range(200):
        lam = random_partition(50, rng, [1, 4, 9, 16, 25, 36, 49])
        assert lam.size == 50
        assert all(p in {1, 4, 9, 16, 25, 36, 49} for p in lam)
    with pytest.raises(ValueError):
        random_partition(3, random.Random(0), [2])
