"""Exit criteria. Each test prints one PASS/FAIL line; run with ``pytest -s`` to see them."""

import time

import pytest

from oracles import count_partitions, pentagonal_numbers
from partition_hodge.cli import main
from partition_hodge.distinct import (
    delta_distinct,
    delta_star_distinct,
    harmonic_distinct_closed_form,
    is_harmonic_distinct,
)
from partition_hodge.hodge import build_report, laplacian_oracle
from partition_hodge.ordinary import delta_ordinary, delta_star_ordinary, is_harmonic_ordinary
from partition_hodge.partitions import PartitionError, enumerate_ordinary, iter_distinct, iter_ordinary, parse_partition
from partition_hodge.qseries import gf_bosonic_rhs, gf_inv_product_one_plus, gf_pentagonal_rhs, gf_product_one_minus, verify_identity

# Harmonic ordinary partitions for n = 1..26, transcribed as printed.
HARMONIC_TABLE = {
    1: "(1)",
    2: "",
    3: "(1^3)",
    4: "(2^2)",
    5: "(1^5)",
    6: "(2^2,1^4)",  # weight 8: misprint
    7: "(1^7)",
    8: "(2^4),(2^2,1^4)",
    9: "(3^3),(1^9)",
    10: "(2^4,1^2),(2^2,1^6)",
    11: "(3^3,1^2),(1^11)",
    12: "(2^6),(2^4,1^4),(2^2,1^8)",
    13: "(3^3,2^2),(3^3,1^4),(1^13)",
    14: "(2^6,1^2),(2^4,1^6),(2^2,1^10)",
    15: "(3^5),(3^3,2^2,1^2),(3^3,1^6),(1^15)",
    16: "(4^4),(2^8),(2^6,1^4),(2^4,1^8),(2^2,1^12)",
    17: "(3^5,1^2),(3^3,2^4),(3^3,2^2,1^4),(3^3,1^8),(1^17)",
    18: "(4^4,1^2),(2^8,1^2),(2^6,1^6),(2^4,1^10),(2^2,1^14)",
    19: "(3^5,2^2),(3^5,1^4),(3^3,2^4,1^2),(3^3,2^2,1^6),(3^3,1^10),(1^19)",
    20: "(4^4,2^2),(4^4,1^4),(2^10),(2^8,1^4),(2^6,1^8),(2^4,1^12),(2^2,1^16)",
    21: "(3^7),(3^5,2^2,1^2),(3^5,1^6),(3^3,2^6),(3^3,2^4,1^4),(3^3,2^2,1^8),(3^3,1^12),(1^21)",
    22: "(4^4,3^2),(4^4,2^2,1^2),(4^4,1^6),(2^10,1^2),(2^8,1^6),(2^6,1^10),(2^4,1^14),(2^2,1^18)",
    23: "(3^7,1^2),(3^5,2^4),(3^5,2^2,1^4),(3^5,1^8),(3^3,2^6,1^2),(3^3,2^4,1^6),(3^3,2^2,1^10),"
        "(3^3,1^14),(1^23)",
    24: "(4^6),(4^4,3^2,1^2),(4^4,2^4),(4^4,2^2,1^4),(4^4,1^8),(2^12),(2^10,1^4),(2^8,1^8),(2^6,1^12),"
        "(2^4,1^16),(2^2,1^20)",
    25: "(5^5),(3^7,2^2),(3^7,1^4),(3^5,2^4,1^2),(3^5,2^2,1^6),(3^5,1^10),(3^3,2^8),(3^3,2^6,1^4),"
        "(3^3,2^4,1^8),(3^3,2^2,1^12),(3^3,1^16),(1^25)",
    26: "(4^6,1^2),(4^4,3^2,2^2),(4^4,3^2,1^4),(4^4,2^4,1^2),(4^4,2^2,1^6),(4^4,1^10),(2^12,1^2),"
        "(2^10,1^6),(2^8,1^10),(2^6,1^14),(2^4,1^18),(2^2,1^22)",
}


# Printed entries that are not partitions of their n, with the only reading of weight n.
CORRECTIONS = {(6, "2^2,1^4"): "2^2,1^2", (25, "3^3.2^8"): "3^3,2^8"}


def printed(n):
    text = HARMONIC_TABLE[n]
    if not text:
        return []
    items = [CORRECTIONS.get((n, item), item) for item in text[1:-1].split("),(")]
    return [parse_partition(item, "ordinary") for item in items]


def test_corrections_only_touch_invalid_entries():
    for (n, raw), fixed in CORRECTIONS.items():
        try:
            weight = parse_partition(raw, "ordinary").weight
        except PartitionError:
            weight = None
        assert weight != n
        assert parse_partition(fixed, "ordinary").weight == n
    for n in HARMONIC_TABLE:
        assert all(p.weight == n for p in printed(n))


def report(number, title, ok, detail=""):
    print(f"[{'PASS' if ok else 'FAIL'}] {number}. {title}" + (f" -- {detail}" if detail else ""))
    assert ok, detail


def timed(fn, *args):
    start = time.perf_counter()
    result = fn(*args)
    return result, time.perf_counter() - start


def test_1_pentagonal_identity(capsys):
    code, elapsed = timed(main, ["verify", "pentagonal", "--order", "500"])
    out = capsys.readouterr().out
    with capsys.disabled():
        report(1, "pentagonal identity to q^500", code == 0 and "equal up to q^500" in out and elapsed < 10,
               f"exit {code}, {elapsed:.2f}s")


def test_2_bosonic_identity(capsys):
    code, elapsed = timed(main, ["verify", "bosonic", "--order", "500"])
    out = capsys.readouterr().out
    with capsys.disabled():
        report(2, "bosonic identity to q^500", code == 0 and "equal up to q^500" in out and elapsed < 10,
               f"exit {code}, {elapsed:.2f}s")


def test_3_euler_identities_and_chain(capsys):
    codes = [main(["verify", name, "--order", "500"]) for name in ("euler-odd", "odd-reciprocal", "neg-q-chain")]
    capsys.readouterr()
    chain = verify_identity("neg-q-chain", 500)
    with capsys.disabled():
        report(3, "Euler odd-part identities and q -> -q derivation chain to q^500",
               codes == [0, 0, 0] and chain.equal, f"exit codes {codes}")


def test_4_harmonic_table():
    bad = []
    for n in range(1, 27):
        computed = [s for s in iter_ordinary(n) if delta_ordinary(s) is None and delta_star_ordinary(s) is None]
        if sorted(computed, key=lambda p: p.parts) != sorted(printed(n), key=lambda p: p.parts):
            bad.append(n)
        assert all(is_harmonic_ordinary(s) for s in computed)
    sizes = (len(printed(2)), len(printed(16)), len(printed(26)))
    report(4, "harmonic ordinary partitions n=1..26 equal the printed table", not bad and sizes == (0, 5, 12),
           f"mismatching n: {bad}" if bad else "")


def test_5_harmonic_distinct_support():
    support = []
    ok = True
    for n in range(1, 61):
        found = [s for s in iter_distinct(n) if delta_distinct(s) is None and delta_star_distinct(s) is None]
        if found:
            support.append(n)
        ok &= len(found) <= 1 and found == harmonic_distinct_closed_form(n)
    expected = [1, 2, 5, 7, 12, 15, 22, 26, 35, 40, 51, 57]
    assert sorted(pentagonal_numbers(60)) == expected
    report(5, "harmonic distinct partitions exist exactly at pentagonal n <= 60", ok and support == expected,
           f"support {support}")


def _suite(partitions, delta, delta_star, harmonic):
    failures = checks = 0
    for sigma in partitions:
        d, ds = delta(sigma), delta_star(sigma)
        conds = [
            d is None or delta(d) is None,
            ds is None or delta_star(ds) is None,
            d is None or delta_star(d) == sigma,
            ds is None or delta(ds) == sigma,
            d is None or ds is None,
            harmonic(sigma) == (d is None and ds is None),
        ]
        checks += 1
        failures += not all(conds)
    return checks, failures


def test_6_proposition_suite():
    dist = _suite(
        (s for n in range(1, 51) for s in iter_distinct(n)), delta_distinct, delta_star_distinct, is_harmonic_distinct
    )
    ordi = _suite(
        (s for n in range(1, 31) for s in iter_ordinary(n)), delta_ordinary, delta_star_ordinary, is_harmonic_ordinary
    )
    assert dist[0] == sum(count_partitions(n, distinct=True) for n in range(1, 51))
    assert ordi[0] == sum(count_partitions(n) for n in range(1, 31))
    report(6, "nilpotency, mutual inverse, exclusivity, harmonic classification",
           dist[1] == 0 and ordi[1] == 0,
           f"{dist[0]} distinct ({dist[1]} failing), {ordi[0]} ordinary ({ordi[1]} failing)")


def test_7_hodge_oracle():
    bad = []
    for kind in ("distinct", "ordinary"):
        for n in range(1, 21):
            # raises ConsistencyError on a failed transpose or nonzero square
            if laplacian_oracle(n, kind) != build_report(n, kind).cohomology:
                bad.append((kind, n))
    report(7, "exact Laplacian kernels equal harmonic counts, n <= 20", not bad, f"disagree at {bad}" if bad else "")


def test_8_triple_agreement():
    bad = []
    for kind, top, series in (
        ("ordinary", 30, (gf_inv_product_one_plus(30), gf_bosonic_rhs(30))),
        ("distinct", 50, (gf_product_one_minus(50), gf_pentagonal_rhs(50))),
    ):
        for n in range(1, top + 1):
            r = build_report(n, kind)
            values = {r.euler_characteristic, r.harmonic_euler_characteristic, series[0][n], series[1][n]}
            if len(values) != 1:
                bad.append((kind, n))
    report(8, "signed count = signed harmonic count = series coefficient", not bad, f"disagree at {bad}" if bad else "")


def test_9_performance():
    start = time.perf_counter()
    basis = enumerate_ordinary(50)
    r = build_report(50, "ordinary", basis)
    elapsed = time.perf_counter() - start
    classified = len(r.all_harmonic()) + 2 * len(r.pairs)
    report(9, "enumerate and classify all ordinary partitions of 50 in < 5 s",
           len(basis) == 204226 and classified == 204226 and elapsed < 5.0, f"{elapsed:.2f}s")
