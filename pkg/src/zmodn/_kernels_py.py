"""Pure-Python (numpy) fallback for the compiled kernels in ``_kernels.pyx``."""
import numpy as np


def nilpotent_witness(n, m, J):
    r = np.arange(n, dtype=np.int64)
    rm = r * m % n
    t = rm.copy()
    live = rm != 0
    for _ in range(2, J + 1):
        t = t * r % n
        if np.any(live & (t == 0)):
            return True
    return False


def nilpotent_flags(n, J):
    # Divisors of n suffice as witnesses; see the compiled kernel for why.
    m = np.arange(n, dtype=np.int64)
    flags = np.zeros(n, dtype=bool)
    flags[0] = True
    cand = np.arange(1, n, dtype=np.int64)
    for r in cand[n % cand == 0].tolist():
        live = r * m % n != 0
        s = r
        for _ in range(2, J + 1):
            s = s * r % n
            flags |= live & (s * m % n == 0)
    return flags.astype(np.uint8)


def torsion_counterexample(n, p):
    m = np.arange(n, dtype=np.int64)
    bad = np.flatnonzero((p * p % n * m % n == 0) & (p % n * m % n != 0))
    return int(bad[0]) if bad.size else -1


def additive_closure(n, mask):
    reach = np.zeros(n, dtype=bool)
    reach[0] = True
    mask = np.asarray(mask, dtype=bool)
    while True:
        pending = np.flatnonzero(mask & ~reach)
        if not pending.size:
            return reach.astype(np.uint8)
        g = int(pending[0])
        # After each pass reach = H + {0, ..., span - 1} g.
        step, span = g, 1
        while span < n:
            reach |= np.roll(reach, step)
            step = 2 * step % n
            span *= 2


def multiplication_kernel(n, c):
    m = np.arange(n, dtype=np.int64)
    return (c % n * m % n == 0).astype(np.uint8)


def multiplication_image(n, c):
    out = np.zeros(n, dtype=np.uint8)
    out[c % n * np.arange(n, dtype=np.int64) % n] = 1
    return out
