"""Exact truncated power series in q and the generating functions they verify.

A :class:`TruncatedSeries` of order ``N`` stores ``c_0, ..., c_N`` as Python
integers and represents the series modulo ``q^(N+1)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Iterable, Optional


class SeriesError(ValueError):
    pass


@dataclass(frozen=True)
class TruncatedSeries:
    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise SeriesError(f"negative order {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise SeriesError(f"order {self.order} needs {self.order + 1} coefficients, got {len(self.coeffs)}")

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], order: int) -> "TruncatedSeries":
        """Pad with zeros or truncate ``coeffs`` to exactly ``order + 1`` terms."""
        c = [int(x) for x in coeffs][: order + 1]
        c.extend([0] * (order + 1 - len(c)))
        return cls(order, tuple(c))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.from_coeffs([1], order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff: int = 1) -> "TruncatedSeries":
        c = [0] * (order + 1)
        if exponent <= order:
            c[exponent] = coeff
        return cls(order, tuple(c))

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def _same_order(self, other: "TruncatedSeries") -> None:
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise SeriesError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._same_order(other)
        return TruncatedSeries(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._same_order(other)
        return TruncatedSeries(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.order, tuple(-a for a in self.coeffs))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise SeriesError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(order, self.coeffs[: order + 1])

    def inverse(self) -> "TruncatedSeries":
        return series_inverse(self)

    def nonzero_terms(self) -> dict[int, int]:
        return {i: c for i, c in enumerate(self.coeffs) if c}

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' + mono if mono else ''}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return f"0 + O(q^{self.order + 1})"
        sign, body = terms[0]
        text = ("-" if sign == "-" else "") + body
        text += "".join(f" {s} {b}" for s, b in terms[1:])
        return f"{text} + O(q^{self.order + 1})"

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> "TruncatedSeries":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(int(obj["order"]), tuple(int(c) for c in obj["coeffs"]))


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product modulo ``q^(N+1)``."""
    a._same_order(b)
    n = a.order
    out = [0] * (n + 1)
    bc = b.coeffs
    for i, ai in enumerate(a.coeffs):
        if not ai:
            continue
        for j in range(n + 1 - i):
            bj = bc[j]
            if bj:
                out[i + j] += ai * bj
    return TruncatedSeries(n, tuple(out))


def series_inverse(a: TruncatedSeries) -> TruncatedSeries:
    c0 = a.coeffs[0]
    if c0 not in (1, -1):
        raise SeriesError(f"constant term {c0} is not a unit over the integers")
    n = a.order
    ac = a.coeffs
    inv = [0] * (n + 1)
    inv[0] = c0
    for k in range(1, n + 1):
        s = 0
        for j in range(1, k + 1):
            if ac[j]:
                s += ac[j] * inv[k - j]
        inv[k] = -s * c0
    return TruncatedSeries(n, tuple(inv))


def substitute_neg_q(a: TruncatedSeries) -> TruncatedSeries:
    """q -> -q, i.e. ``c_n -> (-1)^n c_n``."""
    return TruncatedSeries(a.order, tuple(-c if i % 2 else c for i, c in enumerate(a.coeffs)))


# Sparse factor updates in place; each is O(N).

def _times_binomial(c: list[int], k: int, sign: int) -> None:
    # c *= (1 + sign*q^k)
    for i in range(len(c) - 1, k - 1, -1):
        c[i] += sign * c[i - k]


def _div_binomial(c: list[int], k: int, sign: int) -> None:
    # c /= (1 + sign*q^k)
    for i in range(k, len(c)):
        c[i] -= sign * c[i - k]


def gf_product_one_minus(order: int) -> TruncatedSeries:
    """prod_{m>=1} (1 - q^m)."""
    c = [1] + [0] * order
    for m in range(1, order + 1):
        _times_binomial(c, m, -1)
    return TruncatedSeries(order, tuple(c))


def gf_product_one_plus(order: int) -> TruncatedSeries:
    """prod_{m>=1} (1 + q^m): partitions into distinct parts."""
    c = [1] + [0] * order
    for m in range(1, order + 1):
        _times_binomial(c, m, 1)
    return TruncatedSeries(order, tuple(c))


def gf_partition_numbers(order: int) -> TruncatedSeries:
    """prod_{m>=1} 1/(1 - q^m): the partition function p(n)."""
    c = [1] + [0] * order
    for m in range(1, order + 1):
        _div_binomial(c, m, -1)
    return TruncatedSeries(order, tuple(c))


def gf_inv_product_one_plus(order: int) -> TruncatedSeries:
    """prod_{m>=1} 1/(1 + q^m), by inverting the full product."""
    return series_inverse(gf_product_one_plus(order))


def gf_pentagonal_rhs(order: int) -> TruncatedSeries:
    """1 + sum_l (-1)^l (q^{l(3l-1)/2} + q^{l(3l+1)/2})."""
    c = [1] + [0] * order
    ell = 1
    while ell * (3 * ell - 1) // 2 <= order:
        sign = -1 if ell % 2 else 1
        c[ell * (3 * ell - 1) // 2] += sign
        upper = ell * (3 * ell + 1) // 2
        if upper <= order:
            c[upper] += sign
        ell += 1
    return TruncatedSeries(order, tuple(c))


def _square_terms(order: int, signed: bool) -> TruncatedSeries:
    # 1 + sum_l (+-1)^l q^{l^2} / prod_{j<=l} (1 - q^{2j})
    total = [1] + [0] * order
    term = [1] + [0] * order
    ell = 1
    while ell * ell <= order:
        # term_l = term_{l-1} * q^{2l-1} / (1 - q^{2l})
        shift = 2 * ell - 1
        term = [0] * shift + term[: order + 1 - shift]
        _div_binomial(term, 2 * ell, -1)
        sign = -1 if signed and ell % 2 else 1
        for i in range(order + 1):
            total[i] += sign * term[i]
        ell += 1
    return TruncatedSeries(order, tuple(total))


def gf_bosonic_rhs(order: int) -> TruncatedSeries:
    """1 + sum_l (-1)^l q^{l^2} / prod_{j=1}^{l} (1 - q^{2j})."""
    return _square_terms(order, signed=True)


def gf_euler_rhs(order: int) -> TruncatedSeries:
    """1 + sum_l q^{l^2} / prod_{j=1}^{l} (1 - q^{2j})."""
    return _square_terms(order, signed=False)


def gf_euler_odd_product(order: int) -> TruncatedSeries:
    """prod_{m>=1} (1 + q^{2m-1})."""
    c = [1] + [0] * order
    for k in range(1, order + 1, 2):
        _times_binomial(c, k, 1)
    return TruncatedSeries(order, tuple(c))


def gf_odd_reciprocal(order: int) -> TruncatedSeries:
    """prod_{m>=1} 1/(1 - q^{2m-1}): partitions into odd parts."""
    c = [1] + [0] * order
    for k in range(1, order + 1, 2):
        _div_binomial(c, k, -1)
    return TruncatedSeries(order, tuple(c))


@dataclass(frozen=True)
class Verdict:
    identity: str
    order: int
    equal: bool
    first_mismatch: Optional[int] = None
    lhs: Optional[int] = None
    rhs: Optional[int] = None

    def __str__(self) -> str:
        if self.equal:
            return f"{self.identity}: equal up to q^{self.order}"
        return (
            f"{self.identity}: mismatch at exponent {self.first_mismatch} "
            f"(lhs {self.lhs}, rhs {self.rhs})"
        )


def compare(name: str, lhs: TruncatedSeries, rhs: TruncatedSeries) -> Verdict:
    lhs._same_order(rhs)
    for i, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
        if a != b:
            return Verdict(name, lhs.order, False, i, a, b)
    return Verdict(name, lhs.order, True)


def _neg_q_chain(order: int) -> list[tuple[str, TruncatedSeries, TruncatedSeries]]:
    # q -> -q maps prod(1 + q^{2m-1}) to prod(1 - q^{2m-1}), which is
    # 1/prod(1 + q^m) once prod 1/(1 - q^{2m-1}) = prod(1 + q^m) is used.
    odd_flipped = substitute_neg_q(gf_euler_odd_product(order))
    return [
        ("q->-q of odd product vs inverted odd reciprocal", odd_flipped, series_inverse(gf_odd_reciprocal(order))),
        ("q->-q of odd product vs 1/prod(1+q^m)", odd_flipped, gf_inv_product_one_plus(order)),
        ("q->-q of Euler sum vs alternating sum", substitute_neg_q(gf_euler_rhs(order)), gf_bosonic_rhs(order)),
    ]


def _sides(lhs_fn, rhs_fn):
    return lambda order: [("", lhs_fn(order), rhs_fn(order))]


IDENTITIES: dict[str, Callable[[int], list[tuple[str, TruncatedSeries, TruncatedSeries]]]] = {
    "pentagonal": _sides(gf_product_one_minus, gf_pentagonal_rhs),
    "bosonic": _sides(gf_inv_product_one_plus, gf_bosonic_rhs),
    "euler-odd": _sides(gf_euler_odd_product, gf_euler_rhs),
    "odd-reciprocal": _sides(gf_odd_reciprocal, gf_product_one_plus),
    "neg-q-chain": _neg_q_chain,
}


def verify_identity(identity: str, order: int, perturb: Optional[dict[int, int]] = None) -> Verdict:
    """Expand both sides of a named identity to ``order`` and compare coefficient-wise.

    ``perturb`` adds the given ``{exponent: delta}`` to the right-hand side; it
    exists for negative controls.
    """
    identity = identity.replace("_", "-")
    if identity not in IDENTITIES:
        raise SeriesError(f"unknown identity {identity!r}; choose from {', '.join(IDENTITIES)}")
    if order < 1:
        raise SeriesError(f"order must be at least 1, got {order}")
    verdict = Verdict(identity, order, True)
    for label, lhs, rhs in IDENTITIES[identity](order):
        if perturb:
            c = list(rhs.coeffs)
            for exp, d in perturb.items():
                c[exp] += d
            rhs = TruncatedSeries(order, tuple(c))
        name = f"{identity} ({label})" if label else identity
        verdict = compare(name, lhs, rhs)
        if not verdict.equal:
            return verdict
    return Verdict(identity, order, True)
