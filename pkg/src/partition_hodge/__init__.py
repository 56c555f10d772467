"""Harmonic partitions: coboundary operators on partition complexes and the q-series identities they prove."""

from .distinct import delta_distinct, delta_star_distinct, is_harmonic_distinct, run_stat
from .hodge import HodgeReport, build_report, euler_characteristic_series, laplacian_oracle
from .ordinary import delta_ordinary, delta_star_ordinary, is_harmonic_ordinary, odd_tail
from .partitions import (
    BlockPartition,
    DistinctPartition,
    GradedBasis,
    PartitionError,
    enumerate_distinct,
    enumerate_ordinary,
    format_partition,
    parse_partition,
)
from .qseries import TruncatedSeries, verify_identity

__all__ = [
    "BlockPartition",
    "DistinctPartition",
    "GradedBasis",
    "HodgeReport",
    "PartitionError",
    "TruncatedSeries",
    "build_report",
    "delta_distinct",
    "delta_ordinary",
    "delta_star_distinct",
    "delta_star_ordinary",
    "enumerate_distinct",
    "enumerate_ordinary",
    "euler_characteristic_series",
    "format_partition",
    "is_harmonic_distinct",
    "is_harmonic_ordinary",
    "laplacian_oracle",
    "odd_tail",
    "parse_partition",
    "run_stat",
    "verify_identity",
]
