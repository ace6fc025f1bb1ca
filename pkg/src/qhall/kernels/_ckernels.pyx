# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for dense integer convolution.

A C `long long` fast path handles the common case where coefficients are
machine-sized; anything that could overflow falls back to Python-object
arithmetic inside typed loops.
"""

from libc.stdlib cimport free, malloc

BACKEND = "cython"

# Products of entries bounded by B and up to L accumulated terms stay below
# 2^62 when B*B*L < 2^62; checked in exact Python arithmetic before the
# fast path is taken.
cdef object _FAST_LIMIT = 1 << 62


cdef object _max_abs(list a):
    cdef Py_ssize_t i, n = len(a)
    cdef object m = 0
    for i in range(n):
        v = a[i]
        if v < 0:
            v = -v
        if v > m:
            m = v
    return m


cdef list _conv_fast(list a, list b, Py_ssize_t n):
    cdef Py_ssize_t la = len(a), lb = len(b)
    cdef Py_ssize_t i, j, jmax
    cdef long long ai
    cdef long long *ca = <long long *> malloc(la * sizeof(long long))
    cdef long long *cb = <long long *> malloc(lb * sizeof(long long))
    cdef long long *co = <long long *> malloc(n * sizeof(long long))
    if ca == NULL or cb == NULL or co == NULL:
        if ca != NULL: free(ca)
        if cb != NULL: free(cb)
        if co != NULL: free(co)
        raise MemoryError()
    try:
        for i in range(la):
            ca[i] = a[i]
        for i in range(lb):
            cb[i] = b[i]
        for i in range(n):
            co[i] = 0
        for i in range(la):
            if i >= n:
                break
            ai = ca[i]
            if ai != 0:
                jmax = lb if lb < n - i else n - i
                for j in range(jmax):
                    if cb[j] != 0:
                        co[i + j] += ai * cb[j]
        return [co[i] for i in range(n)]
    finally:
        free(ca)
        free(cb)
        free(co)


cdef list _conv_obj(list a, list b, Py_ssize_t n):
    cdef Py_ssize_t la = len(a), lb = len(b)
    cdef Py_ssize_t i, j, jmax
    cdef list out = [0] * n
    for i in range(la):
        if i >= n:
            break
        ai = a[i]
        if ai:
            jmax = lb if lb < n - i else n - i
            for j in range(jmax):
                bj = b[j]
                if bj:
                    out[i + j] = out[i + j] + ai * bj
    return out


cdef list _conv_impl(list a, list b, Py_ssize_t keep):
    cdef Py_ssize_t la = len(a), lb = len(b)
    if la == 0 or lb == 0 or keep <= 0:
        return []
    cdef Py_ssize_t n = la + lb - 1
    if keep < n:
        n = keep
    cdef Py_ssize_t lmin = la if la < lb else lb
    if _max_abs(a) * _max_abs(b) * lmin < _FAST_LIMIT:
        return _conv_fast(a, b, n)
    return _conv_obj(a, b, n)


def conv(list a, list b):
    """Full convolution of two dense integer coefficient lists."""
    cdef Py_ssize_t la = len(a), lb = len(b)
    if la == 0 or lb == 0:
        return []
    return _conv_impl(a, b, la + lb - 1)


def conv_trunc(list a, list b, Py_ssize_t keep):
    """First `keep` coefficients of conv(a, b); the rest are discarded."""
    return _conv_impl(a, b, keep)
