import pytest
from hypothesis import given, strategies as st

from zmodn.cohomology import (
    QuotientPresentation,
    cohomology_composite,
    cohomology_prime_power,
    cohomology_sequence,
    distinct_from_limit_count,
    first_valid_index,
    is_constant_sequence,
    start_index,
)
from zmodn.cyclic_module import CyclicModule, is_reduced
from zmodn.errors import DomainError, IndexOutOfRange
from zmodn.groups import FiniteAbelianGroup

Z = CyclicModule.of
G = FiniteAbelianGroup


def brute_start(k):
    return min(r for r in range(1, k + 2) if 2 * r + 1 >= k)


@pytest.mark.parametrize("k, r", [(1, 1), (2, 1), (3, 1), (4, 2), (5, 2), (6, 3), (7, 3)])
def test_start_index(k, r):
    assert start_index(k) == r == brute_start(k)


def test_start_index_is_least_with_cochain_property():
    for k in range(1, 60):
        r = start_index(k)
        assert r == brute_start(k)
        # consecutive exponents from r on compose to zero mod p^k
        for e in range(r, r + 5):
            assert 2**e * 2 ** (e + 1) % 2**k == 0
        if r > 1:
            assert 2 ** (r - 1) * 2**r % 2**k != 0


@pytest.mark.parametrize(
    "p, k, n, a, b, text",
    [
        (2, 3, 1, 1, 1, "0"),
        (2, 3, 2, 0, 2, "Z_8/4Z_8"),
        (3, 2, 1, 0, 1, "Z_9/3Z_9"),
        (5, 3, 2, 0, 2, "Z_125/25Z_125"),
        (5, 3, 3, 0, 3, "Z_125"),
        (7, 1, 4, 0, 1, "Z_7"),
        (2, 6, 4, 1, 4, "2Z_64/16Z_64"),
    ],
)
def test_cohomology_prime_power(p, k, n, a, b, text):
    q = cohomology_prime_power(p, k, n)
    assert (q.a, q.b) == (a, b)
    assert str(q) == text
    assert q.order == p ** (b - a)


@given(st.sampled_from([2, 3, 5, 7]), st.integers(0, 15))
def test_vanishing_at_k_equals_2n_plus_1(p, n):
    if n >= 1:
        assert cohomology_prime_power(p, 2 * n + 1, n).group().is_trivial


def test_index_below_start_is_an_error():
    with pytest.raises(IndexOutOfRange):
        cohomology_prime_power(2, 4, 1)
    with pytest.raises(IndexOutOfRange):
        cohomology_composite(Z(16 * 3), 1)
    with pytest.raises(IndexOutOfRange):
        cohomology_prime_power(2, 1, 0)


def test_quotient_presentation_invariants():
    with pytest.raises(DomainError):
        QuotientPresentation(2, 3, 2, 1)
    with pytest.raises(DomainError):
        QuotientPresentation(2, 3, 0, 4)


@pytest.mark.parametrize(
    "n, index, orders",
    [
        (9000, 1, [3]),
        (9000, 2, [4, 9, 25]),
        (9000, 3, [8, 9, 125]),
        (30, 7, [2, 3, 5]),
        (1, 1, []),
        (1, 5, []),
    ],
)
def test_cohomology_composite(n, index, orders):
    assert cohomology_composite(Z(n), index).group == G(tuple(orders))


def test_composite_presentations_match_display():
    h = cohomology_composite(Z(9000), 1)
    assert [str(q) for q in h.presentations] == ["0", "Z_9/3Z_9", "0"]
    h = cohomology_composite(Z(9000), 2)
    assert [str(q) for q in h.presentations] == ["Z_8/4Z_8", "Z_9", "Z_125/25Z_125"]


def test_eventual_constancy():
    for k in range(2, 21):
        for n in range(k, 3 * k + 1):
            assert cohomology_prime_power(3, k, n) == QuotientPresentation(3, k, 0, k)


def test_cohomology_sequence_9000():
    seq = cohomology_sequence(Z(9000), 5)
    assert seq.defined_from == 1
    assert seq.stabilization_index == 3
    assert seq.limit == G((8, 9, 125))
    assert seq.groups[4].group == seq.groups[5].group == seq.groups[3].group
    assert seq.horizon == 5


@pytest.mark.parametrize("p, k", [(2, 1), (2, 5), (3, 4), (11, 2)])
def test_sequence_limit_prime_power(p, k):
    seq = cohomology_sequence(CyclicModule.from_pairs([(p, k)]), k + 3)
    assert seq.limit == G((p**k,))
    assert seq.stabilization_index == k


def test_sequence_reduced_constant_from_one():
    seq = cohomology_sequence(Z(30), 3)
    assert seq.stabilization_index == 1
    assert {h.group for h in seq.groups.values()} == {G((2, 3, 5))}


def test_sequence_horizon_too_small():
    with pytest.raises(DomainError):
        cohomology_sequence(Z(9000), 2)


@given(st.integers(1, 10**12))
def test_stabilization_closed_form(n):
    M = Z(n)
    top = max(M.factorization.max_exponent, 1)
    seq = cohomology_sequence(M, top + 1)
    assert seq.stabilization_index == top
    assert seq.limit == M.canonical()


@pytest.mark.parametrize("p, k, count", [(2, 4, 2), (3, 5, 3), (2, 3, 2), (5, 2, 1)])
def test_distinct_from_limit_count(p, k, count):
    assert distinct_from_limit_count(p, k) == count


def test_distinct_count_matches_scan():
    for k in range(2, 21):
        scan = sum(
            cohomology_prime_power(2, k, n).group() != G((2**k,))
            for n in range(start_index(k), 3 * k)
        )
        assert distinct_from_limit_count(2, k) == scan
        assert scan == (k // 2 if k % 2 == 0 else (k + 1) // 2)


def test_distinct_count_domain():
    with pytest.raises(DomainError):
        distinct_from_limit_count(2, 1)


@pytest.mark.parametrize("n, constant", [(30, True), (9000, False), (1, True), (7, True), (4, False)])
def test_is_constant_sequence(n, constant):
    M = Z(n)
    assert is_constant_sequence(M, max(M.factorization.max_exponent, 2)) is constant


def test_reduced_iff_constant():
    for n in range(1, 2000):
        M = Z(n)
        if first_valid_index(M) != 1:
            continue
        horizon = max(M.factorization.max_exponent, 2) + 3
        assert is_constant_sequence(M, horizon) == is_reduced(M)
