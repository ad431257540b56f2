# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sieve kernel.

Same contract as matula._sieve_py.sieve_segment, with the marking and
extraction loops in C.  Selected automatically by matula._kernel when built.
"""

from cpython cimport array
import array

from libc.string cimport memset

BACKEND = "cython"


def sieve_segment(unsigned long long lo, unsigned long long hi, base_primes):
    """Primes in [lo, hi) as an array('Q'); lo odd >= 3, base covers sqrt."""
    if lo < 3 or lo % 2 == 0:
        raise ValueError(f"segment must start at an odd value >= 3, got {lo}")
    cdef Py_ssize_t n = <Py_ssize_t> ((hi - lo + 1) // 2)
    cdef array.array flags = array.array('b', bytes(n))
    cdef signed char* f = flags.data.as_schars
    memset(f, 1, n)

    cdef array.array base
    if isinstance(base_primes, array.array):
        base = <array.array> base_primes
    else:
        base = array.array('Q', base_primes)
    cdef unsigned long long* bp = base.data.as_ulonglongs
    cdef Py_ssize_t nbase = len(base)

    cdef Py_ssize_t i, j
    cdef unsigned long long p, square, start
    for i in range(nbase):
        p = bp[i]
        if p == 2:
            continue
        square = p * p
        if square >= hi:
            break
        if square > lo:
            start = square
        else:
            start = ((lo + p - 1) // p) * p
        if start % 2 == 0:
            start += p
        if start >= hi:
            continue
        j = <Py_ssize_t> ((start - lo) // 2)
        while j < n:
            f[j] = 0
            j += <Py_ssize_t> p

    cdef Py_ssize_t count = 0
    for j in range(n):
        count += f[j]

    cdef array.array out = array.array('Q', bytes(8 * count))
    cdef unsigned long long* o = out.data.as_ulonglongs
    cdef Py_ssize_t k = 0
    for j in range(n):
        if f[j]:
            o[k] = lo + 2 * <unsigned long long> j
            k += 1
    return out
