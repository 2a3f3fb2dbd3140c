"""Sequentially congruent partitions, their bijection with partitions into
squares and higher powers, exact counting tables and Wright's asymptotic."""

from .bijection import (
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
from .congruence import is_frequency_congruent, is_member_s_jk, is_sequentially_congruent
from .partition_core import (
    Partition,
    PartitionError,
    PartitionSyntaxError,
    conjugate,
    format_partition,
    from_frequency,
    largest_part,
    length,
    make_partition,
    parse_partition,
    size,
    to_frequency,
)

__all__ = [
    "NotInClassError",
    "Partition",
    "PartitionError",
    "PartitionSyntaxError",
    "PowerPartition",
    "SquarePartition",
    "conjugate",
    "format_partition",
    "from_frequency",
    "is_frequency_congruent",
    "is_member_s_jk",
    "is_sequentially_congruent",
    "l_stat",
    "largest_part",
    "length",
    "make_partition",
    "parse_partition",
    "pi_inverse",
    "pi_jk_inverse",
    "pi_jk_map",
    "pi_map",
    "seq_to_square",
    "size",
    "square_to_seq",
    "to_frequency",
]
