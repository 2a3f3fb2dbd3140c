import random
from collections import Counter
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from seqcong.bijection import (
    NotInClassError,
    PowerPartition,
    SquarePartition,
    l_stat,
    pi_inverse,
    pi_jk_inverse,
    pi_jk_map,
    pi_map,
    seq_to_square,
    square_to_seq,
)
from seqcong.congruence import is_frequency_congruent, is_member_s_jk, is_sequentially_congruent
from seqcong.enumeration import partitions_of, random_partition, square_partitions_of
from seqcong.partition_core import Partition, conjugate, from_frequency, largest_part, length

PHI = from_frequency({1: 7, 2: 6, 4: 8, 5: 5})
MU = SquarePartition({1: 7, 2: 3, 4: 2, 5: 1})
EMPTY = Partition(())


@st.composite
def square_partitions(draw, max_size=200):
    n = draw(st.integers(0, max_size))
    rng = random.Random(draw(st.integers(0, 2**32 - 1)))
    return SquarePartition.from_parts(random_partition(n, rng, [b * b for b in range(1, 15)]))


def test_square_partition_type():
    assert MU.size == 76
    assert str(MU) == "1^7 4^3 16^2 25^1"
    assert MU.parts() == (25, 16, 16, 4, 4, 4) + (1,) * 7
    assert SquarePartition.from_parts(MU.parts()) == MU
    assert SquarePartition() == SquarePartition({})
    with pytest.raises(NotInClassError):
        SquarePartition.from_parts([4, 3])
    with pytest.raises(ValueError):
        SquarePartition({2: 0})


def test_power_partition_type():
    rho = PowerPartition(2, 2, (2, 1))
    assert rho.bases == (1, 2)
    assert rho.size == 10
    assert rho.parts() == (4, 4, 1, 1)
    assert PowerPartition.from_parts(rho.parts(), 2, 2) == rho
    with pytest.raises(NotInClassError):
        PowerPartition.from_parts([4, 4, 1], 2, 2)
    with pytest.raises(ValueError):
        PowerPartition(2, 1, (1, 1))


def test_pi_map_examples():
    assert pi_map(PHI) == MU
    assert pi_map(EMPTY) == SquarePartition()
    assert pi_map(Partition((3, 3, 3))) == SquarePartition({3: 1})


def test_pi_map_rejects_and_names_first_bad_part():
    with pytest.raises(NotInClassError, match="part 2 has multiplicity 3"):
        pi_map(Partition((3, 2, 2, 2)))


def test_pi_inverse_examples():
    assert pi_inverse(MU) == PHI
    assert pi_inverse(SquarePartition()) == EMPTY
    assert pi_inverse(SquarePartition({2: 1})) == (2, 2)


def test_composite_examples():
    lam = Partition((26, 19, 13, 13, 5))
    assert seq_to_square(lam) == MU
    assert square_to_seq(MU) == lam
    assert seq_to_square(EMPTY) == SquarePartition()
    assert seq_to_square(Partition((2, 2))) == SquarePartition({2: 1})
    assert square_to_seq(SquarePartition({2: 1})) == (2, 2)
    assert square_to_seq(SquarePartition()) == EMPTY
    with pytest.raises(NotInClassError):
        seq_to_square(Partition((1, 1)))


def test_l_stat_examples():
    assert l_stat(MU) == 26
    assert l_stat(SquarePartition()) == 0
    assert l_stat(SquarePartition({3: 1})) == 3


def test_pi_jk_examples():
    assert pi_jk_map(from_frequency({1: 2, 2: 4}), 2, 1) == PowerPartition(2, 2, (1, 2))
    assert pi_jk_map(EMPTY, 3, 2) == PowerPartition(3, 3, ())
    assert pi_jk_map(from_frequency({1: 1, 2: 2, 3: 3}), 1, 1) == PowerPartition(2, 1, (1, 2, 3))
    assert pi_jk_inverse(PowerPartition(2, 2, (1, 2))) == from_frequency({1: 2, 2: 4})
    assert pi_jk_inverse(PowerPartition(2, 1, ())) == EMPTY
    assert pi_jk_inverse(PowerPartition(3, 1, (2,))) == (2, 2, 2, 2)
    with pytest.raises(NotInClassError):
        pi_jk_map(Partition((2, 2, 1)), 2, 1)


def test_maps_exhaustive():
    for n in range(0, 41):
        squares = set()
        for lam in partitions_of(n):
            if is_frequency_congruent(lam):
                mu = pi_map(lam)
                assert mu.size == n
                assert pi_inverse(mu) == lam
                squares.add(mu)
            else:
                with pytest.raises(NotInClassError):
                    pi_map(lam)
            if is_sequentially_congruent(lam):
                mu = seq_to_square(lam)
                assert mu.size == n
                assert square_to_seq(mu) == lam
                assert l_stat(mu) == largest_part(lam)
            else:
                with pytest.raises(NotInClassError):
                    seq_to_square(lam)
        # pi is onto the square partitions of n
        assert squares == set(square_partitions_of(n))


@given(square_partitions())
def test_square_side_round_trips(mu):
    lam = pi_inverse(mu)
    assert lam.size == mu.size
    assert is_frequency_congruent(lam)
    assert pi_map(lam) == mu
    assert l_stat(mu) == length(lam)
    seq = square_to_seq(mu)
    assert seq.size == mu.size
    assert is_sequentially_congruent(seq)
    assert seq_to_square(seq) == mu
    assert l_stat(mu) == largest_part(seq)


@given(
    st.integers(1, 3),
    st.integers(0, 3),
    st.sets(st.integers(1, 6), max_size=6),
)
def test_pi_jk_round_trips(j, k, bases):
    rho = PowerPartition(k + 1, j, tuple(bases))
    lam = pi_jk_inverse(rho)
    assert lam.size == rho.size == rho.parts().size
    assert pi_jk_map(lam, j, k) == rho
    assert is_member_s_jk(conjugate(lam), j, k, allow_gaps=True)
    assert Counter(rho.parts()) == {b ** (k + 1): j for b in bases}


def test_pi_jk_collapses_to_pi():
    # multiplicity of i exactly i: both maps apply and agree (e_i = 1)
    for r in range(0, 7):
        for bases in combinations(range(1, 7), r):
            lam = pi_jk_inverse(PowerPartition(2, 1, bases))
            rho = pi_jk_map(lam, 1, 1)
            assert pi_map(lam) == SquarePartition({b: 1 for b in rho.bases})
