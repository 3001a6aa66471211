import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from zmodn.errors import ArithmeticOverflow, DomainError
from zmodn.factor import (
    MAX_N,
    Factorization,
    PrimePower,
    factorize,
    is_prime,
    is_squarefree,
    radical,
    valuation,
)

from conftest import naive_factor


def spf_sieve(limit):
    spf = np.zeros(limit + 1, dtype=np.int64)
    for i in range(2, limit + 1):
        if spf[i] == 0:
            spf[i::i][spf[i::i] == 0] = i
    return spf


@pytest.mark.parametrize(
    "n, expected",
    [
        (1, []),
        (9000, [(2, 3), (3, 2), (5, 3)]),
        (30, [(2, 1), (3, 1), (5, 1)]),
        (2, [(2, 1)]),
        (2**62, [(2, 62)]),
        (MAX_N, [(7, 2), (73, 1), (127, 1), (337, 1), (92737, 1), (649657, 1)]),
    ],
)
def test_factorize_examples(n, expected):
    f = factorize(n)
    assert [tuple(pk) for pk in f] == expected
    assert f.n == n


def test_factorize_hard_cofactors():
    # Semiprime of two 31-bit primes and a square of a prime above the trial bound.
    assert factorize(2147483629 * 2147483647).as_pairs() == [[2147483629, 1], [2147483647, 1]]
    assert factorize(1000003**2 * 1000033).as_pairs() == [[1000003, 2], [1000033, 1]]


def test_factorize_errors():
    with pytest.raises(DomainError):
        factorize(0)
    with pytest.raises(DomainError):
        factorize(-5)
    with pytest.raises(ArithmeticOverflow):
        factorize(MAX_N + 1)
    with pytest.raises(DomainError):
        factorize(3.0)


def test_trial_bound_is_configurable():
    assert factorize(101 * 103, trial_bound=10) == factorize(101 * 103)


def test_factorization_validation():
    with pytest.raises(DomainError):
        Factorization((PrimePower(4, 1),))
    with pytest.raises(DomainError):
        Factorization(((3, 1), (2, 1)))
    with pytest.raises(DomainError):
        Factorization(((2, 0),))
    with pytest.raises(ArithmeticOverflow):
        Factorization(((2, 63),))
    assert Factorization.from_pairs([(5, 3), (2, 3), (3, 2)]).n == 9000
    assert Factorization(()).n == 1


@pytest.mark.parametrize(
    "pairs, rad",
    [([(2, 3), (3, 2), (5, 3)], 30), ([], 1), ([(7, 1)], 7)],
)
def test_radical(pairs, rad):
    assert radical(Factorization.from_pairs(pairs)) == rad


@pytest.mark.parametrize(
    "pairs, expected",
    [([(2, 1), (3, 1), (5, 1)], True), ([(2, 3), (3, 2), (5, 3)], False), ([], True)],
)
def test_is_squarefree(pairs, expected):
    assert is_squarefree(Factorization.from_pairs(pairs)) is expected


def test_valuation():
    assert valuation(12, 2) == 2
    assert valuation(0, 5) == math.inf
    assert valuation(9000, 5) == 3
    assert valuation(7, 2) == 0


def test_is_prime_against_sieve():
    spf = spf_sieve(200_000)
    for n in range(200_001):
        assert is_prime(n) == (n >= 2 and spf[n] == n)


@pytest.mark.parametrize(
    "n, expected",
    [
        (3_215_031_751, False),  # strong pseudoprime to bases 2, 3, 5, 7
        (3_825_123_056_546_413_051, False),  # strong pseudoprime to bases up to 23
        (2**61 - 1, True),
        (MAX_N, False),
    ],
)
def test_is_prime_pseudoprimes(n, expected):
    assert is_prime(n) is expected


def test_first_million():
    """factorize on [1, 10^6] against a smallest-prime-factor sieve."""
    limit = 10**6
    spf = spf_sieve(limit)
    for n in range(1, limit + 1):
        f = factorize(n)
        primes = f.primes
        assert list(primes) == sorted(set(primes))
        assert f.n == n
        m, want = n, []
        while m > 1:
            p, e = int(spf[m]), 0
            while m % p == 0:
                m //= p
                e += 1
            want.append((p, e))
        assert [tuple(pk) for pk in f] == want
        rad = radical(f)
        assert n % rad == 0
        assert is_squarefree(f) == (rad == n)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=MAX_N))
def test_factorize_product_property(n):
    f = factorize(n)
    assert f.n == n
    assert all(is_prime(p) for p in f.primes)
    assert list(f.primes) == sorted(set(f.primes))


@given(st.integers(min_value=1, max_value=10**7))
def test_factorize_matches_naive(n):
    assert dict(factorize(n).factors) == naive_factor(n)
