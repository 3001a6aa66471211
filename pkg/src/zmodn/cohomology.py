"""Cohomology of the multiplication-map cochain complex on Z/p^kZ.

The complex is

    Z_{p^k} --p^r--> Z_{p^k} --p^(r+1)--> Z_{p^k} --> ...

where r = start_index(k) is the least positive integer with 2r + 1 >= k, the
smallest exponent at which consecutive maps compose to zero.  H^n sits at the
position with incoming map p^n and outgoing map p^(n+1):

    H^n = ker(p^(n+1)) / im(p^n) = p^(k-1-n) Z_{p^k} / p^n Z_{p^k}

for n < k, and Z_{p^k} itself once n >= k.  Composite moduli split by CRT and
cohomology commutes with the finite direct sum.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cyclic_module import CyclicModule
from .errors import DomainError, IndexOutOfRange, VerificationError
from .groups import FiniteAbelianGroup


@dataclass(frozen=True)
class QuotientPresentation:
    """p^a Z_{p^k} / p^b Z_{p^k}, cyclic of order p^(b - a)."""

    p: int
    k: int
    a: int
    b: int

    def __post_init__(self):
        if not 0 <= self.a <= self.b <= self.k:
            raise DomainError(f"need 0 <= a <= b <= k, got {self}")

    @property
    def order(self) -> int:
        return self.p ** (self.b - self.a)

    def group(self) -> FiniteAbelianGroup:
        if self.a == self.b:
            return FiniteAbelianGroup.trivial()
        return FiniteAbelianGroup((self.order,))

    def __str__(self):
        if self.a == self.b:
            return "0"
        q = self.p**self.k
        num = f"Z_{q}" if self.a == 0 else f"{self.p ** self.a}Z_{q}"
        if self.b == self.k:
            return num
        return f"{num}/{self.p ** self.b}Z_{q}"


@dataclass(frozen=True)
class CohomologyGroup:
    index: int
    presentations: tuple[QuotientPresentation, ...]
    group: FiniteAbelianGroup

    def __str__(self):
        shown = " x ".join(str(q) for q in self.presentations) or "0"
        return f"H^{self.index} = {shown}  ~=  {self.group}"


@dataclass(frozen=True)
class CohomologySequence:
    module: CyclicModule
    defined_from: int
    groups: dict[int, CohomologyGroup]
    stabilization_index: int
    limit: FiniteAbelianGroup

    @property
    def horizon(self) -> int:
        return max(self.groups)


def start_index(k: int) -> int:
    """Least positive r with 2r + 1 >= k."""
    if k < 1:
        raise DomainError(f"exponent must be >= 1, got {k}")
    return max(1, -(-(k - 1) // 2))


def first_valid_index(M: CyclicModule) -> int:
    return max((start_index(k) for k in M.factorization.exponents), default=1)


def cohomology_prime_power(p: int, k: int, n: int) -> QuotientPresentation:
    r = start_index(k)
    if n < r:
        raise IndexOutOfRange(
            f"H^{n}(Z_{p**k}) undefined: the complex starts at index {r}"
        )
    if k == 1:
        return QuotientPresentation(p, 1, 0, 1)
    if n <= k - 1:
        return QuotientPresentation(p, k, k - 1 - n, n)
    return QuotientPresentation(p, k, 0, k)


def cohomology_composite(M: CyclicModule, n: int) -> CohomologyGroup:
    first = first_valid_index(M)
    if n < first:
        raise IndexOutOfRange(f"H^{n}({M}) undefined: valid indices start at {first}")
    pres = tuple(cohomology_prime_power(p, k, n) for p, k in M.factorization)
    return CohomologyGroup(n, pres, FiniteAbelianGroup.product(q.group() for q in pres))


def _stable_from(groups: dict[int, CohomologyGroup]) -> int:
    indices = sorted(groups)
    last = groups[indices[-1]].group
    stable = indices[-1]
    for i in reversed(indices[:-1]):
        if groups[i].group != last:
            break
        stable = i
    return stable


def cohomology_sequence(M: CyclicModule, horizon: int) -> CohomologySequence:
    """All groups from the first valid index through ``horizon``.

    The stabilization index is max(k_i) (1 when M is reduced or trivial); it
    is cross-checked against a scan of the computed groups.
    """
    top = max(M.factorization.max_exponent, 1)
    if horizon < top:
        raise DomainError(f"horizon {horizon} < max exponent {top}; stabilization not observable")
    first = first_valid_index(M)
    groups = {i: cohomology_composite(M, i) for i in range(first, horizon + 1)}
    scanned = _stable_from(groups)
    if scanned != top:
        raise VerificationError(
            f"{M}: groups stabilize at {scanned}, expected max exponent {top}"
        )
    limit = groups[top].group
    if limit != M.canonical():
        raise VerificationError(f"{M}: limit {limit} is not isomorphic to M")
    return CohomologySequence(M, first, groups, top, limit)


def distinct_from_limit_count(p: int, k: int) -> int:
    """How many valid indices give H^n not isomorphic to Z_{p^k}."""
    if k <= 1:
        raise DomainError(f"count is defined for k > 1, got {k}")
    return k - start_index(k)


def is_constant_sequence(M: CyclicModule, horizon: int) -> bool:
    first = first_valid_index(M)
    groups = {cohomology_composite(M, i).group for i in range(first, max(horizon, first) + 1)}
    return len(groups) == 1
