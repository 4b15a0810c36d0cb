"""Exact parity-bias counting and injection audits for integer partitions."""

from .core import (
    Bias,
    ClassSpec,
    Partition,
    PartitionStats,
    bias_class,
    enumerate_partitions,
    from_parts,
    satisfies,
    split,
    stats,
    union,
)
from .counting import BiasCount, CountTable, count_by_dp, count_by_enumeration

__version__ = "0.1.0"
