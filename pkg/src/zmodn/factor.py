"""Exact factorization and prime-power bookkeeping.

Everything downstream is a closed form in the factorization of n, so this
module is the single source of truth for it.  Arithmetic is exact; values
above :data:`MAX_N` are rejected rather than silently truncated.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .errors import ArithmeticOverflow, DomainError

MAX_N = 2**63 - 1
# Element listings and brute-force oracles refuse moduli above this by default.
DEFAULT_ENUM_BOUND = 2**24
DEFAULT_TRIAL_BOUND = 10_000

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
# (limit, bases): Miller-Rabin with these bases is exact for every n < limit.
_MR_TIERS = (
    (1_373_653, (2, 3)),
    (3_215_031_751, (2, 3, 5, 7)),
    (3_474_749_660_383, (2, 3, 5, 7, 11, 13)),
    (341_550_071_728_321, (2, 3, 5, 7, 11, 13, 17)),
    (3_825_123_056_546_413_051, (2, 3, 5, 7, 11, 13, 17, 19, 23)),
    (3_317_044_064_679_887_385_961_981, _SMALL_PRIMES),
)


def is_prime(n: int) -> bool:
    """Deterministic for n < 3.3 * 10**24 (which covers every n <= MAX_N)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < 43 * 43:
        return True
    bases = next((b for limit, b in _MR_TIERS if n < limit), None)
    if bases is None:
        raise ArithmeticOverflow(f"no deterministic primality test for {n}")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimePower(NamedTuple):
    p: int
    k: int

    @property
    def value(self) -> int:
        return self.p**self.k


@dataclass(frozen=True)
class Factorization:
    """n = p_1^k_1 * ... * p_r^k_r with strictly increasing primes.

    The empty factorization is n = 1 (the zero module).
    """

    factors: tuple[PrimePower, ...]
    n: int = field(init=False, compare=False)

    def __post_init__(self):
        factors = tuple(PrimePower(int(p), int(k)) for p, k in self.factors)
        object.__setattr__(self, "factors", factors)
        prev = 1
        for p, k in factors:
            if k < 1:
                raise DomainError(f"exponent of {p} must be >= 1, got {k}")
            if p <= prev:
                raise DomainError("primes must be strictly increasing")
            if not is_prime(p):
                raise DomainError(f"{p} is not prime")
            prev = p
        object.__setattr__(self, "n", math.prod(p**k for p, k in factors))
        if self.n > MAX_N:
            raise ArithmeticOverflow("product exceeds the exact bound 2**63 - 1")

    @classmethod
    def _trusted(cls, factors: tuple[PrimePower, ...]) -> Factorization:
        # factors already known prime, increasing and within bounds
        f = object.__new__(cls)
        object.__setattr__(f, "factors", factors)
        object.__setattr__(f, "n", math.prod(p**k for p, k in factors))
        return f

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> Factorization:
        return cls(tuple(sorted(PrimePower(p, k) for p, k in pairs)))

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(k for _, k in self.factors)

    @property
    def max_exponent(self) -> int:
        """Largest k_i, or 0 for the empty factorization."""
        return max(self.exponents, default=0)

    def as_pairs(self) -> list[list[int]]:
        return [[p, k] for p, k in self.factors]

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __str__(self):
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{k}" if k > 1 else str(p) for p, k in self.factors)


def _pollard_brent(n: int) -> int:
    """Return a nontrivial factor of the odd composite n."""
    for c in range(1, n):
        y, r, q, g = 2, 1, 1, 1
        m = 128
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            # Batched gcd overshot; step back one iteration at a time.
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"Pollard rho failed on {n}")  # unreachable for composite n


def _split(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_brent(n)
    _split(d, out)
    _split(n // d, out)


def factorize(n: int, trial_bound: int = DEFAULT_TRIAL_BOUND) -> Factorization:
    """Factor 1 <= n <= 2**63 - 1.

    Trial division by every integer up to ``trial_bound`` strips small primes;
    whatever cofactor remains goes to Pollard-Brent with fixed seeds, so the
    result is deterministic.
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise DomainError(f"expected an integer, got {n!r}")
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if n > MAX_N:
        raise ArithmeticOverflow(f"{n} exceeds the exact bound 2**63 - 1")

    found: dict[int, int] = {}
    rest = n
    for d in (2, 3):
        if rest % d == 0:
            e = 0
            while rest % d == 0:
                rest //= d
                e += 1
            found[d] = e
    d = 5
    while d <= trial_bound and d * d <= rest:
        for q in (d, d + 2):
            if rest % q == 0:
                e = 0
                while rest % q == 0:
                    rest //= q
                    e += 1
                found[q] = e
        d += 6
    if rest > 1:
        if d * d > rest:
            found[rest] = found.get(rest, 0) + 1
        else:
            _split(rest, found)
    return Factorization._trusted(tuple(PrimePower(p, found[p]) for p in sorted(found)))


def radical(f: Factorization) -> int:
    """Product of the distinct primes of f."""
    return math.prod(f.primes)


def is_squarefree(f: Factorization) -> bool:
    return all(k == 1 for k in f.exponents)


def valuation(m: int, p: int) -> int | float:
    """Exponent of p in m; ``math.inf`` for m = 0."""
    if p < 2:
        raise DomainError(f"valuation needs p >= 2, got {p}")
    if m < 0:
        raise DomainError(f"valuation needs m >= 0, got {m}")
    if m == 0:
        return math.inf
    e = 0
    while m % p == 0:
        m //= p
        e += 1
    return e
