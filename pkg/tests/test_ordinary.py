import pytest

from partition_hodge.ordinary import (
    delta_ordinary,
    delta_star_ordinary,
    is_harmonic_ordinary,
    normalize_blocks,
    odd_tail,
)
from partition_hodge.partitions import EMPTY_ORDINARY, PartitionError, iter_ordinary, parse_partition


def P(text):
    return parse_partition(text, "ordinary")


@pytest.mark.parametrize(
    "source, image",
    [
        ("4", "3,1"),
        ("2^2", None),
        ("3,1", None),
        ("2^2,1^4", None),
        ("2", "1^2"),
        ("3", "2,1"),
        ("2,1^2", "1^4"),  # case (ii): m_1 = 1 = n_2, m_2 even
        ("5^2,2^2", "4^2,2^3"),  # case (ii) joining a middle block
        ("5^2,3", "4^2,3,2"),  # case (iii) with i = k
        ("5^2,3,1^2", "4^2,3,2,1^2"),  # case (iii), tail multiplicities even
        ("5^2,3,1", None),  # case (iii), odd tail
        ("4^2,3", "3^3,2"),  # (n_1 - 1) merges with n_2
    ],
)
def test_delta(source, image):
    assert delta_ordinary(P(source)) == (None if image is None else P(image))


@pytest.mark.parametrize(
    "source, image",
    [
        ("3,1", "4"),
        ("1^3", None),
        ("1^2", "2"),
        ("1^4", "2,1^2"),
        ("2^3", "3^2"),  # t = 1, m_1 = n_1 + 1
        ("2^5", "3^2,2^2"),  # t = 1, m_1 = n_1 + 2*1 + 1
        ("2^2", None),
        ("3,2", None),  # t = 2, n_t = 2 > m_1 = 1
        ("3^2,2", "4^2"),  # t = 2, n_t = 2 <= m_1: (3)^0 and (2)^0 are omitted
        ("4^3,3^2,1", "5,4^2,3^2"),
    ],
)
def test_delta_star(source, image):
    assert delta_star_ordinary(P(source)) == (None if image is None else P(image))


@pytest.mark.parametrize("text, harmonic", [("2^4,1^2", True), ("3,1", False), ("1", True), ("2^3", False), ("3^5", True)])
def test_is_harmonic(text, harmonic):
    assert is_harmonic_ordinary(P(text)) is harmonic


@pytest.mark.parametrize("text, t", [("2^2,1^4", None), ("3,1", 2), ("3^3,2^2", 1), ("4,3^2,2^3,1^2", 3)])
def test_odd_tail(text, t):
    assert odd_tail(P(text)) == t


def test_normalize_blocks():
    assert normalize_blocks([(3, 1), (2, 0), (2, 2), (2, 1), (1, 0)]) == ((3, 1), (2, 3))
    assert normalize_blocks([(1, 1), (1, 1)]) == ((1, 2),)


def test_empty_rejected():
    with pytest.raises(PartitionError):
        delta_ordinary(EMPTY_ORDINARY)
    with pytest.raises(PartitionError):
        delta_star_ordinary(EMPTY_ORDINARY)


def test_operator_identities_to_24():
    for n in range(1, 25):
        for sigma in iter_ordinary(n):
            d, ds = delta_ordinary(sigma), delta_star_ordinary(sigma)
            assert d is None or ds is None
            if d is not None:
                assert delta_ordinary(d) is None and delta_star_ordinary(d) == sigma
                assert (d.weight, d.length) == (n, sigma.length + 1)
                type(d)(d.blocks)
            if ds is not None:
                assert delta_star_ordinary(ds) is None and delta_ordinary(ds) == sigma
                assert (ds.weight, ds.length) == (n, sigma.length - 1)
                type(ds)(ds.blocks)
            assert is_harmonic_ordinary(sigma) == (d is None and ds is None)


def test_harmonic_sign_law():
    for n in range(1, 31):
        for sigma in iter_ordinary(n):
            if is_harmonic_ordinary(sigma):
                assert sigma.length % 2 == sigma.blocks[0][0] % 2
