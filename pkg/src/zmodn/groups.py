"""Finite abelian groups up to isomorphism.

Every group arising here is a product of cyclic p-groups, so the sorted
multiset of prime-power cyclic orders (elementary divisors) is a complete
isomorphism invariant.  Two :class:`FiniteAbelianGroup` values compare equal
exactly when the groups are isomorphic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .factor import factorize


def _prime_power_base(q: int) -> int | None:
    f = factorize(q)
    return f.primes[0] if len(f) == 1 else None


@dataclass(frozen=True)
class FiniteAbelianGroup:
    orders: tuple[int, ...] = ()

    def __post_init__(self):
        orders = tuple(sorted(int(q) for q in self.orders))
        for q in orders:
            if q < 2 or _prime_power_base(q) is None:
                raise DomainError(f"{q} is not a prime power >= 2")
        object.__setattr__(self, "orders", orders)

    @classmethod
    def trivial(cls) -> FiniteAbelianGroup:
        return cls(())

    @classmethod
    def cyclic(cls, order: int) -> FiniteAbelianGroup:
        """Z_order, split into its primary parts."""
        if order < 1:
            raise DomainError(f"cyclic group order must be >= 1, got {order}")
        return cls(tuple(pk.value for pk in factorize(order)))

    def __mul__(self, other: FiniteAbelianGroup) -> FiniteAbelianGroup:
        return FiniteAbelianGroup(self.orders + other.orders)

    @classmethod
    def product(cls, groups) -> FiniteAbelianGroup:
        return cls(tuple(q for g in groups for q in g.orders))

    @property
    def order(self) -> int:
        return math.prod(self.orders)

    @property
    def is_trivial(self) -> bool:
        return not self.orders

    @property
    def is_cyclic(self) -> bool:
        bases = [_prime_power_base(q) for q in self.orders]
        return len(bases) == len(set(bases))

    def __str__(self):
        if not self.orders:
            return "0"
        return " x ".join(f"Z_{q}" for q in self.orders)

