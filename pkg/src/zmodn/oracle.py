"""Definition-level brute force, independent of the closed forms.

Nothing here consults ``cyclic_module`` or ``cohomology``.  Each function
enumerates residues (through :mod:`zmodn.kernels`) and applies a definition
directly, so agreement with a closed form is real evidence.
"""
from __future__ import annotations

import numpy as np

from . import kernels
from .errors import DomainError, ComplexViolation, ResourceError, StructuralViolation
from .factor import DEFAULT_ENUM_BOUND, factorize
from .groups import FiniteAbelianGroup


def _require(n: int, bound: int) -> None:
    if n < 1:
        raise DomainError(f"modulus must be >= 1, got {n}")
    if n > bound:
        raise ResourceError(f"modulus {n} exceeds the enumeration bound {bound}")


def witness_bound(n: int) -> int:
    """Largest power j worth trying for a witness r^j m = 0.

    v_p(r^j m) = j v_p(r) + v_p(m) only grows with j and annihilation needs no
    more than k_p, so j = max(2, max k_p) decides every case.
    """
    return max(2, factorize(n).max_exponent)


def nilpotent_by_definition(n: int, m: int, bound: int = DEFAULT_ENUM_BOUND) -> bool:
    """m = 0, or some r, j >= 2 has r^j m = 0 while r m != 0 (mod n)."""
    _require(n, bound)
    if not 0 <= m < n:
        raise DomainError(f"{m} is not a residue mod {n}")
    if m == 0:
        return True
    return kernels.nilpotent_witness(n, m, witness_bound(n))


def nilpotent_mask(n: int, bound: int = DEFAULT_ENUM_BOUND) -> np.ndarray:
    """Boolean array over [0, n): True where the residue is nilpotent."""
    _require(n, bound)
    return kernels.nilpotent_flags(n, witness_bound(n)).astype(bool)


def _sorted(mask) -> list[int]:
    return np.flatnonzero(mask).tolist()


def kernel_of_multiplication(p: int, k: int, e: int, bound: int = DEFAULT_ENUM_BOUND) -> list[int]:
    q = p**k
    _require(q, bound)
    return _sorted(kernels.multiplication_kernel(q, p**e))


def image_of_multiplication(p: int, k: int, e: int, bound: int = DEFAULT_ENUM_BOUND) -> list[int]:
    q = p**k
    _require(q, bound)
    return _sorted(kernels.multiplication_image(q, p**e))


def cohomology_brute(p: int, k: int, n: int, bound: int = DEFAULT_ENUM_BOUND) -> FiniteAbelianGroup:
    """ker(p^(n+1)) / im(p^n) on Z_{p^k}, by enumeration."""
    if n < 1:
        raise DomainError("H^0 is not part of the complex")
    q = p**k
    _require(q, bound)
    ker = kernels.multiplication_kernel(q, p ** (n + 1)).astype(bool)
    img = kernels.multiplication_image(q, p**n).astype(bool)
    if np.any(img & ~ker):
        raise ComplexViolation(
            f"im(p^{n}) not inside ker(p^{n + 1}) on Z_{q}: maps do not compose to zero"
        )
    size_ker, size_img = int(ker.sum()), int(img.sum())
    if size_ker % size_img:
        raise StructuralViolation(f"|im| = {size_img} does not divide |ker| = {size_ker}")
    # A subquotient of a cyclic group is cyclic.
    return FiniteAbelianGroup.cyclic(size_ker // size_img)


def cohomology_composite_brute(n: int, index: int, bound: int = DEFAULT_ENUM_BOUND) -> FiniteAbelianGroup:
    """Product over the CRT summands Z_{p^k} of :func:`cohomology_brute`."""
    return FiniteAbelianGroup.product(
        cohomology_brute(p, k, index, bound) for p, k in factorize(n)
    )


def span_of_nilpotents(n: int, bound: int = DEFAULT_ENUM_BOUND) -> list[int]:
    _require(n, bound)
    if n == 1:
        return [0]
    return _sorted(kernels.additive_closure(n, nilpotent_mask(n, bound)))


def non_nilpotent_submodule(n: int, bound: int = DEFAULT_ENUM_BOUND) -> list[int]:
    """N = {0} + non-nilpotents, checked to be closed under addition."""
    _require(n, bound)
    if n == 1:
        return [0]
    N = ~nilpotent_mask(n, bound)
    N[0] = True
    closure = kernels.additive_closure(n, N).astype(bool)
    if np.any(closure != N):
        raise StructuralViolation(f"{{0}} + non-nilpotents of Z/{n}Z is not a subgroup")
    return _sorted(N)


def quotient_by_non_nilpotents(n: int, bound: int = DEFAULT_ENUM_BOUND) -> FiniteAbelianGroup:
    members = non_nilpotent_submodule(n, bound)
    if n % len(members):
        raise StructuralViolation(f"|N| = {len(members)} does not divide {n}")
    cosets = n // len(members)
    # Order of the coset 1 + N: least t > 0 with t in N (n if N = {0}).
    order = members[1] if len(members) > 1 else n
    if order != cosets:
        raise StructuralViolation(f"Z/{n}Z / N has {cosets} cosets but 1 + N has order {order}")
    return FiniteAbelianGroup.cyclic(cosets)


def _primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = False
    return np.flatnonzero(sieve).tolist()


def satisfies_torsion_p2_condition(n: int, bound: int = DEFAULT_ENUM_BOUND) -> bool:
    """For every prime p <= n and m in Z/n: p^2 m = 0 implies p m = 0."""
    _require(n, bound)
    for p in _primes_upto(n):
        if n % p:
            # p is a unit mod n: p m = 0 and p^2 m = 0 both force m = 0.
            continue
        if kernels.torsion_counterexample(n, p) >= 0:
            return False
    return True
