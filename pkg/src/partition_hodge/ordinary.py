"""Block-wise coboundary and adjoint on ordinary partitions.

A partition is handled in block form ``(n_1^{m_1}, ..., n_k^{m_k})``. The
coboundary strips the first column of the leading block and reinserts it as a
single part of size ``m_1``; the adjoint moves one part ``n_t`` (the last block
with odd multiplicity) back onto the leading block as a column.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .partitions import BlockPartition, PartitionError, blocks_unchecked

Blocks = Sequence[tuple[int, int]]


def normalize_blocks(blocks: Blocks) -> tuple[tuple[int, int], ...]:
    """Drop zero-multiplicity blocks and merge neighbours with equal parts."""
    out: list[tuple[int, int]] = []
    for block in blocks:
        if block[1] == 0:
            continue
        if out and out[-1][0] == block[0]:
            out[-1] = (block[0], out[-1][1] + block[1])
        else:
            out.append(block)
    return tuple(out)


def odd_tail(sigma: BlockPartition) -> Optional[int]:
    """1-based index of the last block with odd multiplicity, or None if all are even."""
    for t in range(len(sigma.blocks), 0, -1):
        if sigma.blocks[t - 1][1] % 2:
            return t
    return None


def _all_even(blocks, start: int) -> bool:
    return all(m % 2 == 0 for _, m in blocks[start:])


def _checked(blocks: Blocks, source: BlockPartition) -> BlockPartition:
    image = normalize_blocks(blocks)
    assert all(a[0] > b[0] for a, b in zip(image, image[1:])), (source, image)
    return blocks_unchecked(image)


def delta_ordinary(sigma: BlockPartition) -> Optional[BlockPartition]:
    blocks = sigma.blocks
    if not blocks:
        raise PartitionError("coboundary is undefined on the empty partition")
    n1, m1 = blocks[0]
    if m1 > n1 - 1:
        return None
    k = len(blocks)
    head = ((n1 - 1, m1),)
    # m_1 equals an existing part: the new part joins that block
    for j in range(1, k):
        if blocks[j][0] == m1:
            if not _all_even(blocks, j):
                return None
            part, mult = blocks[j]
            return _checked(head + blocks[1:j] + ((part, mult + 1),) + blocks[j + 1:], sigma)
    # otherwise it lands between n_i > m_1 > n_{i+1}; i = k when n_k > m_1
    i = 1
    while i < k and blocks[i][0] > m1:
        i += 1
    if not _all_even(blocks, i):
        return None
    return _checked(head + blocks[1:i] + ((m1, 1),) + blocks[i:], sigma)


def delta_star_ordinary(sigma: BlockPartition) -> Optional[BlockPartition]:
    blocks = sigma.blocks
    if not blocks:
        raise PartitionError("adjoint is undefined on the empty partition")
    n1, m1 = blocks[0]
    t = odd_tail(sigma)
    if t is None or t == 1:
        if n1 > m1 or (m1 - n1) % 2 == 0:
            return None
        # m_1 = n_1 + 2i + 1
        return _checked(((n1 + 1, n1), (n1, m1 - n1 - 1)) + blocks[1:], sigma)
    nt, mt = blocks[t - 1]
    if nt > m1:
        return None
    return _checked(
        ((n1 + 1, nt), (n1, m1 - nt)) + blocks[1:t - 1] + ((nt, mt - 1),) + blocks[t:],
        sigma,
    )


def is_harmonic_ordinary(sigma: BlockPartition) -> bool:
    """True for ``(n_1^{n_1 + 2e}, n_2^{2t_2}, ..., n_k^{2t_k})`` with ``e >= 0``."""
    blocks = sigma.blocks
    n1, m1 = blocks[0]
    return m1 >= n1 and (m1 - n1) % 2 == 0 and _all_even(blocks, 1)
