# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels for the brute-force oracles.

Same contracts as ``_kernels_py``; selected by ``zmodn.kernels`` when built.
All moduli must satisfy n * n < 2**63.
"""
import numpy as np

cimport numpy as cnp

ctypedef long long i64


def nilpotent_witness(i64 n, i64 m, int J):
    """True iff r^j m = 0 and r m != 0 (mod n) for some r in [0, n), j in [2, J]."""
    cdef i64 r, t, rm
    cdef int j
    for r in range(n):
        rm = (r * m) % n
        if rm == 0:
            continue
        t = rm
        for j in range(2, J + 1):
            t = (t * r) % n
            if t == 0:
                return True
    return False


def nilpotent_flags(i64 n, int J):
    """flags[m] = 1 iff m is nilpotent by definition (m = 0 included).

    Witnesses r are scanned over divisors of n only: any r in [1, n) equals
    gcd(r, n) times a unit, and multiplying by a unit changes neither r m = 0
    nor r^j m = 0.
    """
    out = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] flags = out
    cdef i64 r, s, m, acc_r, acc_s
    cdef int j
    flags[0] = 1
    for r in range(1, n):
        if n % r:
            continue
        s = r
        for j in range(2, J + 1):
            s = (s * r) % n
            acc_r = 0
            acc_s = 0
            for m in range(n):
                if acc_s == 0 and acc_r != 0:
                    flags[m] = 1
                acc_r += r
                if acc_r >= n:
                    acc_r -= n
                acc_s += s
                if acc_s >= n:
                    acc_s -= n
    return out


def torsion_counterexample(i64 n, i64 p):
    """Least m in [0, n) with p^2 m = 0 but p m != 0 (mod n), else -1."""
    cdef i64 m, pp = (p * p) % n, p1 = p % n
    for m in range(n):
        if (pp * m) % n == 0 and (p1 * m) % n != 0:
            return m
    return -1


def additive_closure(i64 n, cnp.uint8_t[::1] mask):
    """Smallest subset of Z/n containing 0 and mask, closed under addition."""
    out = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] reach = out
    cdef i64[::1] members = np.empty(n, dtype=np.int64)
    cdef i64 count = 1, snapshot, g, i, y
    reach[0] = 1
    members[0] = 0
    for g in range(n):
        if not mask[g] or reach[g]:
            continue
        # reach is a subgroup H; grow it to H + <g> by walking +g from each member.
        snapshot = count
        for i in range(snapshot):
            y = (members[i] + g) % n
            while not reach[y]:
                reach[y] = 1
                members[count] = y
                count += 1
                y += g
                if y >= n:
                    y -= n
    return out


def multiplication_kernel(i64 n, i64 c):
    """mask of {m : c m = 0 mod n}."""
    out = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] ker = out
    cdef i64 m, acc = 0, step = c % n
    for m in range(n):
        if acc == 0:
            ker[m] = 1
        acc += step
        if acc >= n:
            acc -= n
    return out


def multiplication_image(i64 n, i64 c):
    """mask of {c m mod n : m in [0, n)}."""
    out = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] img = out
    cdef i64 m, acc = 0, step = c % n
    for m in range(n):
        img[acc] = 1
        acc += step
        if acc >= n:
            acc -= n
    return out
