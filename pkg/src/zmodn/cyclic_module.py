"""The Z-module Z/nZ and its nilpotent structure, via closed forms.

With n = p_1^k_1 ... p_r^k_r and d = p_1^(k_1-1) ... p_r^(k_r-1), a nonzero
residue is non-nilpotent exactly when d divides it.  The non-nilpotents are
therefore the rad(n) - 1 nonzero multiples of d, and together with 0 they
form the submodule dZ/nZ, whose quotient is Z/dZ.  Everything below is an
O(number of primes) consequence of that.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import DomainError, ResourceError
from .factor import (
    DEFAULT_ENUM_BOUND,
    Factorization,
    PrimePower,
    factorize,
    is_squarefree,
    radical,
)
from .groups import FiniteAbelianGroup


class ElementClass(enum.Enum):
    ZERO = "zero"
    NILPOTENT = "nilpotent"
    NON_NILPOTENT = "non-nilpotent"


@dataclass(frozen=True)
class CyclicModule:
    factorization: Factorization

    @classmethod
    def of(cls, n: int) -> CyclicModule:
        return cls(factorize(n))

    @classmethod
    def from_pairs(cls, pairs) -> CyclicModule:
        return cls(Factorization.from_pairs(pairs))

    @property
    def n(self) -> int:
        return self.factorization.n

    @property
    def nil_generator(self) -> int:
        """d = prod p_i^(k_i - 1); generates {0} + non-nilpotents."""
        return math.prod(p ** (k - 1) for p, k in self.factorization)

    def canonical(self) -> FiniteAbelianGroup:
        """Isomorphism class of M as an abelian group (CRT splitting)."""
        return FiniteAbelianGroup(tuple(pk.value for pk in self.factorization))

    def __str__(self):
        return f"Z/{self.n}Z"


class Reduction(NamedTuple):
    generator: int
    quotient: CyclicModule


@dataclass(frozen=True)
class ReductionChain:
    steps: tuple[CyclicModule, ...]

    @property
    def length(self) -> int:
        """Number of quotient steps taken (len(steps) - 1)."""
        return len(self.steps) - 1

    @property
    def final(self) -> CyclicModule:
        return self.steps[-1]


def _check_element(M: CyclicModule, m: int) -> None:
    if isinstance(m, bool) or not isinstance(m, int):
        raise DomainError(f"element must be an integer residue, got {m!r}")
    if not 0 <= m < M.n:
        raise DomainError(f"{m} is not a canonical residue mod {M.n}")


def classify_element(M: CyclicModule, m: int) -> ElementClass:
    _check_element(M, m)
    if m == 0:
        return ElementClass.ZERO
    if m % M.nil_generator == 0:
        return ElementClass.NON_NILPOTENT
    return ElementClass.NILPOTENT


def non_nilpotent_count(M: CyclicModule) -> int:
    return radical(M.factorization) - 1


def _check_listing(M: CyclicModule, limit: int | None, bound: int) -> None:
    if limit is not None and limit < 0:
        raise DomainError(f"limit must be >= 0, got {limit}")
    if limit is None and M.n > bound:
        raise ResourceError(
            f"listing elements of Z/{M.n}Z exceeds the enumeration bound {bound}; "
            "pass a limit"
        )


def non_nilpotent_elements(
    M: CyclicModule, limit: int | None = None, bound: int = DEFAULT_ENUM_BOUND
) -> list[int]:
    """Ascending nonzero multiples of d, truncated to ``limit`` if given."""
    _check_listing(M, limit, bound)
    d = M.nil_generator
    count = non_nilpotent_count(M)
    if limit is not None:
        count = min(count, limit)
    return [d * t for t in range(1, count + 1)]


def nilpotent_elements(
    M: CyclicModule, limit: int | None = None, bound: int = DEFAULT_ENUM_BOUND
) -> list[int]:
    """Ascending nonzero nilpotent residues (0 is reported separately as ZERO)."""
    _check_listing(M, limit, bound)
    d = M.nil_generator
    out = []
    for m in range(1, M.n):
        if limit is not None and len(out) >= limit:
            break
        if m % d:
            out.append(m)
    return out


def is_reduced(M: CyclicModule) -> bool:
    return is_squarefree(M.factorization)


def is_semisimple(M: CyclicModule) -> bool:
    # Z/nZ splits into Z/p^kZ summands, each simple iff k = 1.
    return all(k == 1 for k in M.factorization.exponents)


def same_class(M1: CyclicModule, M2: CyclicModule) -> bool:
    return radical(M1.factorization) == radical(M2.factorization)


def reduce_once(M: CyclicModule) -> Reduction:
    """Quotient of M by N = {0} + non-nilpotents.

    N = dZ/nZ, so M/N is Z/dZ.  A reduced M has d = 1 and collapses to the
    zero module; :func:`reduction_chain` stops before doing that.
    """
    quotient = Factorization._trusted(
        tuple(PrimePower(p, k - 1) for p, k in M.factorization if k >= 2)
    )
    return Reduction(M.nil_generator, CyclicModule(quotient))


def reduction_chain(M: CyclicModule) -> ReductionChain:
    steps = [M]
    while not is_reduced(steps[-1]):
        steps.append(reduce_once(steps[-1]).quotient)
    return ReductionChain(tuple(steps))
