"""Coboundary and adjoint on partitions with distinct parts.

Both maps send a basis partition either to zero (``None``) or to exactly one
partition of the same weight, with length shifted by one.
"""

from __future__ import annotations

from typing import Optional

from .partitions import DistinctPartition, PartitionError, distinct_unchecked


def run_stat(sigma: DistinctPartition) -> int:
    """Length of the initial run ``n_1, n_1 - 1, n_1 - 2, ...`` of consecutive parts."""
    parts = sigma.parts
    if not parts:
        raise PartitionError("run statistic is undefined on the empty partition")
    m = 1
    while m < len(parts) and parts[m] == parts[m - 1] - 1:
        m += 1
    return m


def delta_distinct(sigma: DistinctPartition) -> Optional[DistinctPartition]:
    """Remove one box from each of the first ``m`` parts and append them as a new last part."""
    parts = sigma.parts
    m = run_stat(sigma)
    ell = len(parts)
    last = parts[-1]
    if m < ell:
        if m >= last:
            return None
    elif m >= last - 1:
        return None
    image = tuple(p - 1 for p in parts[:m]) + parts[m:] + (m,)
    assert all(a > b for a, b in zip(image, image[1:])) and image[-1] > 0, image
    return distinct_unchecked(image)


def delta_star_distinct(sigma: DistinctPartition) -> Optional[DistinctPartition]:
    """Drop the last part ``n_l`` and add one to each of the first ``n_l`` parts."""
    parts = sigma.parts
    m = run_stat(sigma)
    ell = len(parts)
    last = parts[-1]
    if m < ell:
        if m < last:
            return None
    elif m <= last:
        return None
    image = tuple(p + 1 for p in parts[:last]) + parts[last:-1]
    assert all(a > b for a, b in zip(image, image[1:])), image
    return distinct_unchecked(image)


def is_harmonic_distinct(sigma: DistinctPartition) -> bool:
    """True for the staircases ``(2l-1, ..., l)`` and ``(2l, ..., l+1)``."""
    ell = len(sigma.parts)
    return run_stat(sigma) == ell and sigma.parts[-1] in (ell, ell + 1)


def harmonic_distinct_closed_form(n: int) -> list[DistinctPartition]:
    """Harmonic distinct partitions of ``n`` read off the two pentagonal families."""
    found = []
    ell = 1
    while ell * (3 * ell - 1) // 2 <= n:
        if ell * (3 * ell - 1) // 2 == n:
            found.append(DistinctPartition(tuple(range(2 * ell - 1, ell - 1, -1))))
        if ell * (3 * ell + 1) // 2 == n:
            found.append(DistinctPartition(tuple(range(2 * ell, ell, -1))))
        ell += 1
    return found
