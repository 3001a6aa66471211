"""Backend selection for the enumeration kernels.

The compiled Cython module is used when it was built; otherwise the numpy
fallback.  Both expose the same functions with the same results.
"""
import numpy as np

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKENDS = {"python": _kernels_py}
if _compiled is not None:
    BACKENDS["compiled"] = _compiled

_active = _compiled or _kernels_py


def backend() -> str:
    return "compiled" if _active is _compiled else "python"


def use_backend(name: str) -> None:
    global _active
    try:
        _active = BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(BACKENDS)}") from None


def nilpotent_witness(n, m, J):
    return bool(_active.nilpotent_witness(n, m, J))


def nilpotent_flags(n, J):
    return _active.nilpotent_flags(n, J)


def torsion_counterexample(n, p):
    return int(_active.torsion_counterexample(n, p))


def additive_closure(n, mask):
    return _active.additive_closure(n, np.ascontiguousarray(mask, dtype=np.uint8))


def multiplication_kernel(n, c):
    return _active.multiplication_kernel(n, c)


def multiplication_image(n, c):
    return _active.multiplication_image(n, c)
