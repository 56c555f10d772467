"""Array kernels for exhaustive sweeps over all ordinary partitions of n.

The sweep enumerates every partition of ``n`` in block form, applies both
operators, checks the pairing identities, and tallies basis, harmonic, source
and target counts per length. The kernels are compiled with numba when it is
importable and ``PARTITION_HODGE_DISABLE_NUMBA`` is unset (or ``0``);
otherwise the identical code runs as plain Python over numpy arrays.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

ENV_DISABLE = "PARTITION_HODGE_DISABLE_NUMBA"
NUMBA_ENABLED = numba is not None and os.environ.get(ENV_DISABLE, "").strip() in ("", "0")


def _jit(fn):
    if NUMBA_ENABLED:
        return numba.njit(cache=True)(fn)
    return fn


@_jit
def _push(op, om, ok, part, mult):
    # append a block, dropping empty ones and merging equal neighbours
    if mult == 0:
        return ok
    if ok > 0 and op[ok - 1] == part:
        om[ok - 1] += mult
        return ok
    op[ok] = part
    om[ok] = mult
    return ok + 1


@_jit
def delta_blocks(p, m, k, op, om):
    """Coboundary of blocks ``p[:k], m[:k]`` into ``op, om``; returns the new block count, 0 for zero."""
    n1 = p[0]
    m1 = m[0]
    if m1 > n1 - 1:
        return 0
    j = -1
    for idx in range(1, k):
        if p[idx] == m1:
            j = idx
            break
    if j >= 0:
        for idx in range(j, k):
            if m[idx] % 2 == 1:
                return 0
        ok = _push(op, om, 0, n1 - 1, m1)
        for idx in range(1, k):
            if idx == j:
                ok = _push(op, om, ok, p[idx], m[idx] + 1)
            else:
                ok = _push(op, om, ok, p[idx], m[idx])
        return ok
    i = 1
    while i < k and p[i] > m1:
        i += 1
    for idx in range(i, k):
        if m[idx] % 2 == 1:
            return 0
    ok = _push(op, om, 0, n1 - 1, m1)
    for idx in range(1, i):
        ok = _push(op, om, ok, p[idx], m[idx])
    ok = _push(op, om, ok, m1, 1)
    for idx in range(i, k):
        ok = _push(op, om, ok, p[idx], m[idx])
    return ok


@_jit
def delta_star_blocks(p, m, k, op, om):
    """Adjoint of blocks ``p[:k], m[:k]`` into ``op, om``; returns the new block count, 0 for zero."""
    n1 = p[0]
    m1 = m[0]
    t = -1
    for idx in range(k - 1, -1, -1):
        if m[idx] % 2 == 1:
            t = idx
            break
    if t <= 0:
        if n1 > m1 or (m1 - n1) % 2 == 0:
            return 0
        ok = _push(op, om, 0, n1 + 1, n1)
        ok = _push(op, om, ok, n1, m1 - n1 - 1)
        for idx in range(1, k):
            ok = _push(op, om, ok, p[idx], m[idx])
        return ok
    nt = p[t]
    if nt > m1:
        return 0
    ok = _push(op, om, 0, n1 + 1, nt)
    ok = _push(op, om, ok, n1, m1 - nt)
    for idx in range(1, t):
        ok = _push(op, om, ok, p[idx], m[idx])
    ok = _push(op, om, ok, nt, m[t] - 1)
    for idx in range(t + 1, k):
        ok = _push(op, om, ok, p[idx], m[idx])
    return ok


@_jit
def _same(p, m, k, q, r, j):
    if k != j:
        return False
    for idx in range(k):
        if p[idx] != q[idx] or m[idx] != r[idx]:
            return False
    return True


@_jit
def _closed_form_harmonic(p, m, k):
    if m[0] < p[0] or (m[0] - p[0]) % 2 == 1:
        return False
    for idx in range(1, k):
        if m[idx] % 2 == 1:
            return False
    return True


@_jit
def ordinary_sweep_kernel(n):
    """Rows: basis count, harmonic, delta-sources, delta*-sources, defects; columns: length 0..n."""
    table = np.zeros((5, n + 1), dtype=np.int64)
    p = np.zeros(n + 2, dtype=np.int64)
    m = np.zeros(n + 2, dtype=np.int64)
    ap = np.zeros(n + 2, dtype=np.int64)
    am = np.zeros(n + 2, dtype=np.int64)
    bp = np.zeros(n + 2, dtype=np.int64)
    bm = np.zeros(n + 2, dtype=np.int64)
    p[0] = n
    m[0] = 1
    k = 1
    while True:
        ell = 0
        for idx in range(k):
            ell += m[idx]
        table[0, ell] += 1
        ka = delta_blocks(p, m, k, ap, am)
        kb = delta_star_blocks(p, m, k, bp, bm)
        bad = False
        if ka > 0 and kb > 0:
            bad = True
        if ka > 0:
            table[2, ell] += 1
            # the image must map back under the adjoint and die under delta
            kc = delta_star_blocks(ap, am, ka, bp, bm)
            if not _same(p, m, k, bp, bm, kc):
                bad = True
            if delta_blocks(ap, am, ka, bp, bm) > 0:
                bad = True
        elif kb > 0:
            table[3, ell] += 1
            kc = delta_blocks(bp, bm, kb, ap, am)
            if not _same(p, m, k, ap, am, kc):
                bad = True
            if delta_star_blocks(bp, bm, kb, ap, am) > 0:
                bad = True
        else:
            table[1, ell] += 1
        if (ka == 0 and kb == 0) != _closed_form_harmonic(p, m, k):
            bad = True
        if bad:
            table[4, ell] += 1

        # next partition, lexicographically descending
        ones = 0
        if p[k - 1] == 1:
            ones = m[k - 1]
            k -= 1
            if k == 0:
                break
        part = p[k - 1]
        if m[k - 1] > 1:
            m[k - 1] -= 1
        else:
            k -= 1
        rest = part + ones
        smaller = part - 1
        p[k] = smaller
        m[k] = rest // smaller
        k += 1
        if rest % smaller:
            p[k] = rest % smaller
            m[k] = 1
            k += 1
    return table


@dataclass(frozen=True)
class SweepResult:
    n: int
    counts: dict[int, int]
    harmonic: dict[int, int]
    sources: dict[int, int]
    targets: dict[int, int]
    defects: int

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** ell * c for ell, c in self.counts.items())

    @property
    def harmonic_euler_characteristic(self) -> int:
        return sum((-1) ** ell * c for ell, c in self.harmonic.items())


def sweep_ordinary(n: int) -> SweepResult:
    """Exhaustively classify all ordinary partitions of ``n``."""
    if int(n) != n or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    n = int(n)
    table = ordinary_sweep_kernel(n)

    def row(r):
        return {ell: int(table[r, ell]) for ell in range(1, n + 1) if table[0, ell]}

    return SweepResult(n, row(0), row(1), row(2), row(3), int(table[4].sum()))


def load_interpreted():
    """A separate copy of this module with compilation disabled, for side-by-side comparison."""
    import importlib.util
    import sys

    spec = importlib.util.spec_from_file_location(f"{__name__}_interpreted", __file__)
    module = importlib.util.module_from_spec(spec)
    sys.modules[spec.name] = module
    saved = os.environ.get(ENV_DISABLE)
    os.environ[ENV_DISABLE] = "1"
    try:
        spec.loader.exec_module(module)
    finally:
        if saved is None:
            del os.environ[ENV_DISABLE]
        else:
            os.environ[ENV_DISABLE] = saved
    return module
