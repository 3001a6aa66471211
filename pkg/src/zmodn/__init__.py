"""Structural invariants of the Z-module Z/nZ from the factorization of n.

Closed forms live in :mod:`zmodn.factor`, :mod:`zmodn.cyclic_module` and
:mod:`zmodn.cohomology`; :mod:`zmodn.oracle` recomputes them by brute force.
"""
from .cohomology import (
    CohomologyGroup,
    CohomologySequence,
    QuotientPresentation,
    cohomology_composite,
    cohomology_prime_power,
    cohomology_sequence,
    distinct_from_limit_count,
    first_valid_index,
    is_constant_sequence,
    start_index,
)
from .cyclic_module import (
    CyclicModule,
    ElementClass,
    Reduction,
    ReductionChain,
    classify_element,
    is_reduced,
    is_semisimple,
    nilpotent_elements,
    non_nilpotent_count,
    non_nilpotent_elements,
    reduce_once,
    reduction_chain,
    same_class,
)
from .errors import (
    ArithmeticOverflow,
    ComplexViolation,
    DomainError,
    IndexOutOfRange,
    ResourceError,
    StructuralViolation,
    VerificationError,
    ZModNError,
)
from .factor import (
    DEFAULT_ENUM_BOUND,
    MAX_N,
    Factorization,
    PrimePower,
    factorize,
    is_prime,
    is_squarefree,
    radical,
    valuation,
)
from .groups import FiniteAbelianGroup

__version__ = "0.1.0"
