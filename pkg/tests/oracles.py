"""Independent reference computations used to freeze expected values.

Nothing here imports the package under test.
"""

from itertools import combinations, combinations_with_replacement


def count_partitions(n, distinct=False):
    # coin-change dynamic programme
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        if distinct:
            for w in range(n, part - 1, -1):
                ways[w] += ways[w - part]
        else:
            for w in range(part, n + 1):
                ways[w] += ways[w - part]
    return ways[n]


def partition_numbers_euler(n_max):
    # p(n) = sum_k (-1)^{k+1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]
    p = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        total, k = 0, 1
        while k * (3 * k - 1) // 2 <= n:
            sign = 1 if k % 2 else -1
            total += sign * p[n - k * (3 * k - 1) // 2]
            if k * (3 * k + 1) // 2 <= n:
                total += sign * p[n - k * (3 * k + 1) // 2]
            k += 1
        p[n] = total
    return p


def brute_ordinary(n):
    """All partitions of n as descending tuples, by multiset search per length."""
    found = set()
    for length in range(1, n + 1):
        for combo in combinations_with_replacement(range(1, n + 1), length):
            if sum(combo) == n:
                found.add(tuple(sorted(combo, reverse=True)))
    return found


def brute_distinct(n):
    found = set()
    for length in range(1, n + 1):
        for combo in combinations(range(1, n + 1), length):
            if sum(combo) == n:
                found.add(tuple(sorted(combo, reverse=True)))
    return found


def signed_count(parts_set):
    return sum((-1) ** len(p) for p in parts_set)


def odd_part_count(n):
    ways = [1] + [0] * n
    for part in range(1, n + 1, 2):
        for w in range(part, n + 1):
            ways[w] += ways[w - part]
    return ways[n]


def pentagonal_numbers(limit):
    out = set()
    ell = 1
    while ell * (3 * ell - 1) // 2 <= limit:
        out.add(ell * (3 * ell - 1) // 2)
        if ell * (3 * ell + 1) // 2 <= limit:
            out.add(ell * (3 * ell + 1) // 2)
        ell += 1
    return out


def poly_mul(a, b, order):
    out = [0] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        for j, y in enumerate(b[: order + 1 - i]):
            out[i + j] += x * y
    return out
