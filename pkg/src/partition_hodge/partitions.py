"""Distinct-part and ordinary partitions: representation, enumeration, exchange format.

Distinct partitions are strictly decreasing tuples of parts. Ordinary partitions
are kept in block form, a tuple of ``(part, multiplicity)`` pairs with strictly
decreasing parts, because both coboundary operators act on whole blocks.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Iterator, Literal, Union

Kind = Literal["distinct", "ordinary"]
KINDS: tuple[str, ...] = ("distinct", "ordinary")


class PartitionError(ValueError):
    """Raised for malformed partitions or unparseable exchange text."""


@dataclass(frozen=True, slots=True)
class DistinctPartition:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        prev = None
        for p in self.parts:
            if type(p) is not int or p <= 0:
                raise PartitionError(f"part {p!r} is not a positive integer")
            if prev is not None and p >= prev:
                raise PartitionError(f"parts not strictly decreasing at {p}")
            prev = p

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return format_partition(self)


@dataclass(frozen=True, slots=True)
class BlockPartition:
    """Ordinary partition ``(n_1^{m_1}, ..., n_k^{m_k})`` with ``n_1 > ... > n_k``."""

    blocks: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        prev = None
        for block in self.blocks:
            if len(block) != 2:
                raise PartitionError(f"block {block!r} is not a (part, multiplicity) pair")
            p, m = block
            if type(p) is not int or p <= 0:
                raise PartitionError(f"part {p!r} is not a positive integer")
            if type(m) is not int or m <= 0:
                raise PartitionError(f"multiplicity {m!r} of part {p} is not positive")
            if prev is not None and p >= prev:
                raise PartitionError(f"block parts not strictly decreasing at {p}")
            prev = p

    @classmethod
    def from_parts(cls, parts) -> "BlockPartition":
        """Build from a weakly decreasing sequence of parts, grouping equal runs."""
        parts = list(parts)
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise PartitionError("parts must be weakly decreasing")
        blocks: list[list[int]] = []
        for p in parts:
            if blocks and blocks[-1][0] == p:
                blocks[-1][1] += 1
            else:
                blocks.append([p, 1])
        return cls(tuple((p, m) for p, m in blocks))

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(p for p, m in self.blocks for _ in range(m))

    @property
    def weight(self) -> int:
        return sum(p * m for p, m in self.blocks)

    @property
    def length(self) -> int:
        return sum(m for _, m in self.blocks)

    def __len__(self) -> int:
        return self.length

    def __str__(self) -> str:
        return format_partition(self)


Partition = Union[DistinctPartition, BlockPartition]

# The length-0 partition of 0. Never stored in a GradedBasis.
EMPTY_DISTINCT = DistinctPartition(())
EMPTY_ORDINARY = BlockPartition(())


def _trusted(cls, value):
    # Skips validation; only for outputs of the enumerators and operators,
    # whose shape is guaranteed by construction.
    obj = object.__new__(cls)
    object.__setattr__(obj, cls.__slots__[0], value)
    return obj


def distinct_unchecked(parts: tuple[int, ...]) -> DistinctPartition:
    return _trusted(DistinctPartition, parts)


def blocks_unchecked(blocks: tuple[tuple[int, int], ...]) -> BlockPartition:
    return _trusted(BlockPartition, blocks)


@dataclass
class GradedBasis:
    """All partitions of weight ``n`` of one kind, grouped by length."""

    n: int
    kind: Kind
    slices: dict[int, list[Partition]] = field(default_factory=dict)

    def __getitem__(self, length: int) -> list[Partition]:
        return self.slices.get(length, [])

    def lengths(self) -> list[int]:
        return sorted(self.slices)

    def __iter__(self) -> Iterator[Partition]:
        for length in self.lengths():
            yield from self.slices[length]

    def __len__(self) -> int:
        return sum(len(s) for s in self.slices.values())

    def counts(self) -> dict[int, int]:
        return {length: len(self.slices[length]) for length in self.lengths()}


def _check_weight(n) -> None:
    if type(n) is not int or n < 1:
        raise PartitionError(f"weight must be a positive integer, got {n!r}")


def _distinct_tuples(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    # Lexicographically descending; parts below `largest` inclusive.
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        # 1 + 2 + ... + first is the most the remaining parts can absorb
        if first * (first + 1) // 2 < n:
            break
        for rest in _distinct_tuples(n - first, first - 1):
            yield (first,) + rest


def _block_tuples(n: int) -> Iterator[tuple[tuple[int, int], ...]]:
    # Lexicographically descending, one O(1)-amortized step per partition:
    # strip the trailing 1s, take one copy of the last part p, and spread
    # p + (number of 1s) over parts of size p - 1.
    blocks: list[tuple[int, int]] = [(n, 1)]
    while True:
        yield tuple(blocks)
        ones = 0
        if blocks[-1][0] == 1:
            ones = blocks.pop()[1]
            if not blocks:
                return
        part, mult = blocks.pop()
        if mult > 1:
            blocks.append((part, mult - 1))
        rest = part + ones
        smaller = part - 1
        q, r = divmod(rest, smaller)
        blocks.append((smaller, q))
        if r:
            blocks.append((r, 1))


def iter_distinct(n: int) -> Iterator[DistinctPartition]:
    """Yield every partition of ``n`` into distinct parts, lexicographically descending."""
    _check_weight(n)
    for parts in _distinct_tuples(n, n):
        yield distinct_unchecked(parts)


def iter_ordinary(n: int) -> Iterator[BlockPartition]:
    """Yield every partition of ``n`` in block form, lexicographically descending."""
    _check_weight(n)
    for blocks in _block_tuples(n):
        yield blocks_unchecked(blocks)


def _group(n: int, kind: Kind, items) -> GradedBasis:
    basis = GradedBasis(n, kind)
    slices = basis.slices
    for p in items:
        slices.setdefault(len(p), []).append(p)
    basis.slices = dict(sorted(slices.items()))
    return basis


def enumerate_distinct(n: int) -> GradedBasis:
    return _group(n, "distinct", iter_distinct(n))


def enumerate_ordinary(n: int) -> GradedBasis:
    return _group(n, "ordinary", iter_ordinary(n))


def enumerate_partitions(n: int, kind: Kind) -> GradedBasis:
    if kind == "distinct":
        return enumerate_distinct(n)
    if kind == "ordinary":
        return enumerate_ordinary(n)
    raise PartitionError(f"unknown partition kind {kind!r}")


_INT = re.compile(r"[0-9]+\Z")


def _parse_int(token: str, text: str) -> int:
    token = token.strip()
    if not _INT.match(token):
        raise PartitionError(f"bad token {token!r} in {text!r}")
    value = int(token)
    if value <= 0:
        raise PartitionError(f"non-positive value {token!r} in {text!r}")
    return value


def parse_partition(text: str, kind: Kind) -> Partition:
    """Parse exchange text: ``"4,2,1"`` (distinct) or ``"3^3,2^2,1"`` (ordinary).

    Adjacent equal parts in ordinary input are merged into a single block.
    """
    if kind not in KINDS:
        raise PartitionError(f"unknown partition kind {kind!r}")
    stripped = text.strip()
    if not stripped:
        return EMPTY_DISTINCT if kind == "distinct" else EMPTY_ORDINARY
    tokens = stripped.split(",")
    if kind == "distinct":
        parts = []
        for tok in tokens:
            if "^" in tok:
                raise PartitionError(f"bad token {tok.strip()!r}: distinct parts take no multiplicity")
            value = _parse_int(tok, text)
            if parts and value >= parts[-1]:
                raise PartitionError(f"bad token {tok.strip()!r}: parts must strictly decrease")
            parts.append(value)
        return DistinctPartition(tuple(parts))

    blocks: list[list[int]] = []
    for tok in tokens:
        part_text, sep, mult_text = tok.partition("^")
        part = _parse_int(part_text, text)
        mult = _parse_int(mult_text, text) if sep else 1
        if blocks and part > blocks[-1][0]:
            raise PartitionError(f"bad token {tok.strip()!r}: parts must weakly decrease")
        if blocks and part == blocks[-1][0]:
            blocks[-1][1] += mult
        else:
            blocks.append([part, mult])
    return BlockPartition(tuple((p, m) for p, m in blocks))


def format_partition(p: Partition) -> str:
    if isinstance(p, DistinctPartition):
        return ",".join(map(str, p.parts))
    return ",".join(str(part) if m == 1 else f"{part}^{m}" for part, m in p.blocks)


def partition_to_json(p: Partition) -> dict:
    if isinstance(p, DistinctPartition):
        return {"kind": "distinct", "parts": list(p.parts)}
    return {"kind": "ordinary", "blocks": [[part, m] for part, m in p.blocks]}


def partition_from_json(obj) -> Partition:
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        kind = obj["kind"]
        if kind == "distinct":
            return DistinctPartition(tuple(obj["parts"]))
        if kind == "ordinary":
            return BlockPartition(tuple((p, m) for p, m in obj["blocks"]))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, PartitionError):
            raise
        raise PartitionError(f"malformed partition JSON: {obj!r}") from exc
    raise PartitionError(f"unknown partition kind {kind!r}")
