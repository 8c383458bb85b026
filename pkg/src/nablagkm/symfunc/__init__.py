"""Symmetric functions over Q(q,t): classical bases, Hall pairing, omega,
plethysm, quasisymmetric expansions, and partition statistics."""

from .bases import SymF, hall_inner, omega
from .partitions import (
    Composition,
    Partition,
    compositions_of,
    conjugate,
    dominates,
    hooks,
    iota_stat,
    n_stat,
    nprime_stat,
    partition_stats,
    partitions,
    rearrangements,
    sort_to_partition,
    zee,
)
from .plethysm import Alphabet, SymF2, plethysm
from .qsym import QSymExpansion, to_qsym

__all__ = [
    "Alphabet",
    "Composition",
    "Partition",
    "QSymExpansion",
    "SymF",
    "SymF2",
    "compositions_of",
    "conjugate",
    "dominates",
    "hall_inner",
    "hooks",
    "iota_stat",
    "n_stat",
    "nprime_stat",
    "omega",
    "partition_stats",
    "partitions",
    "plethysm",
    "rearrangements",
    "sort_to_partition",
    "to_qsym",
    "zee",
]
