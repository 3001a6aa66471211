"""Sweep closed forms against the brute-force oracle.

Closed forms are looked up on their modules at call time, so a patched
function (a deliberately perturbed formula) is what gets checked.
"""
from __future__ import annotations

from typing import Any, Iterator, NamedTuple

from . import cohomology as co
from . import cyclic_module as cm
from . import oracle
from .cyclic_module import CyclicModule, ElementClass
from .errors import ZModNError
from .factor import DEFAULT_ENUM_BOUND, factorize, is_prime, is_squarefree


class Mismatch(NamedTuple):
    n: int
    check: str
    expected: Any
    actual: Any


def _oracle_class(mask, m: int) -> ElementClass:
    if m == 0:
        return ElementClass.ZERO
    return ElementClass.NILPOTENT if mask[m] else ElementClass.NON_NILPOTENT


def _checks(n: int, bound: int) -> Iterator[Mismatch]:
    f = factorize(n)
    if f.n != n or any(not is_prime(p) for p in f.primes):
        yield Mismatch(n, "factorize", n, str(f))
    M = CyclicModule(f)

    mask = oracle.nilpotent_mask(n, bound)
    for m in range(n):
        got = cm.classify_element(M, m)
        want = _oracle_class(mask, m)
        if got is not want:
            yield Mismatch(n, f"classify_element({m})", want.value, got.value)
            break
    non_nil = [m for m in range(1, n) if not mask[m]]
    if cm.non_nilpotent_count(M) != len(non_nil):
        yield Mismatch(n, "non_nilpotent_count", len(non_nil), cm.non_nilpotent_count(M))
    if cm.non_nilpotent_elements(M, bound=bound) != non_nil:
        yield Mismatch(n, "non_nilpotent_elements", non_nil[:8], cm.non_nilpotent_elements(M, limit=8))

    torsion = oracle.satisfies_torsion_p2_condition(n, bound)
    for name, value in (
        ("is_reduced", cm.is_reduced(M)),
        ("is_semisimple", cm.is_semisimple(M)),
        ("is_squarefree", is_squarefree(f)),
        ("no_nonzero_nilpotents", not mask[1:].any()),
    ):
        if value != torsion:
            yield Mismatch(n, name, torsion, value)

    red = cm.reduce_once(M)
    N = oracle.non_nilpotent_submodule(n, bound)
    if N != list(range(0, n, red.generator)):
        yield Mismatch(n, "reduce_once.generator", N[1] if len(N) > 1 else n, red.generator)
    quotient = oracle.quotient_by_non_nilpotents(n, bound)
    if red.quotient.canonical() != quotient:
        yield Mismatch(n, "reduce_once.quotient", str(quotient), str(red.quotient.canonical()))

    span = oracle.span_of_nilpotents(n, bound)
    want_span = 1 if cm.is_reduced(M) else n
    if len(span) != want_span:
        yield Mismatch(n, "span_of_nilpotents", want_span, len(span))

    for p, k in f:
        for i in range(co.start_index(k), 2 * k + 1):
            got = co.cohomology_prime_power(p, k, i).group()
            want = oracle.cohomology_brute(p, k, i, bound)
            if got != want:
                yield Mismatch(n, f"H^{i}(Z_{p**k})", str(want), str(got))

    top = max(f.max_exponent, 1)
    horizon = top + 2
    first = co.first_valid_index(M)
    brute = {i: oracle.cohomology_composite_brute(n, i, bound) for i in range(first, horizon + 1)}
    for i, want in brute.items():
        got = co.cohomology_composite(M, i).group
        if got != want:
            yield Mismatch(n, f"H^{i}", str(want), str(got))
    stable = horizon
    while stable - 1 in brute and brute[stable - 1] == brute[horizon]:
        stable -= 1
    seq = co.cohomology_sequence(M, horizon)
    if seq.stabilization_index != stable:
        yield Mismatch(n, "stabilization_index", stable, seq.stabilization_index)
    if seq.limit != brute[horizon]:
        yield Mismatch(n, "limit", str(brute[horizon]), str(seq.limit))
    constant = len(set(brute.values())) == 1
    if co.is_constant_sequence(M, horizon) != constant:
        yield Mismatch(n, "is_constant_sequence", constant, not constant)


def verify_modulus(n: int, bound: int = DEFAULT_ENUM_BOUND) -> list[Mismatch]:
    """Every closed-form/oracle comparison for Z/nZ; empty list means agreement."""
    if n == 1:
        return []
    try:
        return list(_checks(n, bound))
    except ZModNError as exc:
        if exc.exit_code != 3:
            raise
        return [Mismatch(n, type(exc).__name__, "consistent", str(exc))]


def verify_range(start: int, stop: int, bound: int = DEFAULT_ENUM_BOUND) -> Iterator[Mismatch]:
    for n in range(start, stop + 1):
        yield from verify_modulus(n, bound)
