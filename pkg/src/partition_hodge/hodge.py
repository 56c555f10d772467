"""Matching decomposition, exact Laplacian oracle, and Euler characteristics.

Each basis partition is either harmonic (killed by both operators), the source
of a pair ``(sigma, delta sigma)``, or the target of exactly one pair. Counting
the harmonic elements gives the cohomology; the Laplacian oracle recomputes the
same numbers by exact linear algebra over the rationals.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .distinct import delta_distinct, delta_star_distinct
from .ordinary import delta_ordinary, delta_star_ordinary
from .partitions import GradedBasis, Kind, Partition, enumerate_partitions, format_partition
from .qseries import TruncatedSeries

OPERATORS = {
    "distinct": (delta_distinct, delta_star_distinct),
    "ordinary": (delta_ordinary, delta_star_ordinary),
}


class ConsistencyError(RuntimeError):
    """An operator violated an identity it is supposed to satisfy."""


def operators(kind: Kind):
    try:
        return OPERATORS[kind]
    except KeyError:
        raise ValueError(f"unknown partition kind {kind!r}") from None


@dataclass
class HodgeReport:
    n: int
    kind: Kind
    counts: dict[int, int]
    harmonic: dict[int, list[Partition]]
    pairs: list[tuple[Partition, Partition]] = field(repr=False)

    @property
    def cohomology(self) -> dict[int, int]:
        return {ell: len(self.harmonic.get(ell, [])) for ell in self.counts}

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** ell * c for ell, c in self.counts.items())

    @property
    def harmonic_euler_characteristic(self) -> int:
        return sum((-1) ** ell * len(h) for ell, h in self.harmonic.items())

    def all_harmonic(self) -> list[Partition]:
        return [p for ell in sorted(self.harmonic) for p in self.harmonic[ell]]

    def check(self) -> None:
        """Every basis element must be harmonic, a pair source, or a pair target, exactly once."""
        seen: dict[Partition, str] = {}
        for ell, items in self.harmonic.items():
            for p in items:
                if len(p) != ell or p in seen:
                    raise ConsistencyError(f"harmonic {format_partition(p)} misplaced or repeated")
                seen[p] = "harmonic"
        for src, dst in self.pairs:
            if len(dst) != len(src) + 1:
                raise ConsistencyError(f"pair {src} -> {dst} does not raise length by one")
            for p in (src, dst):
                if p in seen:
                    raise ConsistencyError(f"{format_partition(p)} appears twice in the decomposition")
                seen[p] = "paired"
        if len(seen) != sum(self.counts.values()):
            raise ConsistencyError(f"decomposition covers {len(seen)} of {sum(self.counts.values())} elements")
        if self.euler_characteristic != self.harmonic_euler_characteristic:
            raise ConsistencyError("Euler characteristic differs from the harmonic count")

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "kind": self.kind,
            "chi": self.euler_characteristic,
            "harmonic": {
                str(ell): [format_partition(p) for p in items]
                for ell, items in sorted(self.harmonic.items())
                if items
            },
            "pairs": [[format_partition(a), format_partition(b)] for a, b in self.pairs],
            "counts": {str(ell): c for ell, c in sorted(self.counts.items())},
            "cohomology": {str(ell): d for ell, d in sorted(self.cohomology.items())},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def build_report(n: int, kind: Kind, basis: GradedBasis | None = None) -> HodgeReport:
    delta, delta_star = operators(kind)
    if basis is None:
        basis = enumerate_partitions(n, kind)
    harmonic: dict[int, list[Partition]] = {}
    pairs: list[tuple[Partition, Partition]] = []
    for ell in basis.lengths():
        found = []
        for sigma in basis.slices[ell]:
            image = delta(sigma)
            if image is not None:
                pairs.append((sigma, image))
            elif delta_star(sigma) is None:
                found.append(sigma)
        harmonic[ell] = found
    return HodgeReport(n, kind, basis.counts(), harmonic, pairs)


# Exact linear-algebra oracle


def operator_matrix(source: list[Partition], target: list[Partition], op) -> np.ndarray:
    """0/1 matrix of ``op`` from span(source) to span(target) in the given orderings."""
    index = {p: i for i, p in enumerate(target)}
    mat = np.zeros((len(target), len(source)), dtype=np.int64)
    for j, p in enumerate(source):
        image = op(p)
        if image is None:
            continue
        if image not in index:
            raise ConsistencyError(f"image {format_partition(image)} of {format_partition(p)} outside target slice")
        mat[index[image], j] += 1
    return mat


def exact_rank(mat) -> int:
    """Rank by Gaussian elimination over the rationals."""
    rows = [[Fraction(int(x)) for x in row] for row in np.asarray(mat).tolist()]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pr = rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / pr[col]
                rows[r] = [a - f * b for a, b in zip(rows[r], pr)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def laplacian_oracle(n: int, kind: Kind, basis: GradedBasis | None = None) -> dict[int, int]:
    """Kernel dimension of ``delta delta* + delta* delta`` on each length slice.

    Also checks, as matrices, that both operators square to zero and that the
    adjoint is the transpose of the coboundary; any failure raises
    :class:`ConsistencyError`.
    """
    delta, delta_star = operators(kind)
    if basis is None:
        basis = enumerate_partitions(n, kind)
    top = max(basis.lengths())
    slices = {ell: basis[ell] for ell in range(0, top + 2)}
    # up[ell]: slice ell -> ell+1, down[ell]: slice ell+1 -> ell
    up = {ell: operator_matrix(slices[ell], slices[ell + 1], delta) for ell in range(0, top + 1)}
    down = {ell: operator_matrix(slices[ell + 1], slices[ell], delta_star) for ell in range(0, top + 1)}
    for ell in range(0, top + 1):
        if not np.array_equal(down[ell], up[ell].T):
            raise ConsistencyError(f"adjoint is not the transpose of the coboundary at length {ell}")
    for ell in range(0, top):
        if np.any(up[ell + 1] @ up[ell]):
            raise ConsistencyError(f"coboundary squared is nonzero at length {ell}")
        if np.any(down[ell] @ down[ell + 1]):
            raise ConsistencyError(f"adjoint squared is nonzero at length {ell + 2}")
    kernels = {}
    for ell in basis.lengths():
        size = len(slices[ell])
        lap = down[ell] @ up[ell]
        if ell >= 1:
            lap = lap + up[ell - 1] @ down[ell - 1]
        assert lap.shape == (size, size)
        # matched elements give 1 on the diagonal, harmonic ones 0
        if not np.array_equal(lap @ lap, lap) or np.any(lap - np.diag(np.diag(lap))):
            raise ConsistencyError(f"Laplacian is not a diagonal projection at length {ell}")
        kernels[ell] = size - exact_rank(lap)
    return kernels


def signed_count(basis: GradedBasis) -> int:
    return sum((-1) ** ell * c for ell, c in basis.counts().items())


def euler_characteristic_series(kind: Kind, max_n: int) -> TruncatedSeries:
    """``1 + sum_n chi(n) q^n`` with chi the alternating slice count."""
    if max_n < 1:
        raise ValueError(f"max_n must be at least 1, got {max_n}")
    coeffs = [1] + [signed_count(enumerate_partitions(n, kind)) for n in range(1, max_n + 1)]
    return TruncatedSeries(max_n, tuple(coeffs))
