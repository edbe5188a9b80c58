# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled versions of the hot kernels; see ``_pykernels`` for the contracts."""
import numpy as np

from libc.stdint cimport int32_t, int64_t, uint64_t

cdef extern from *:
    """
    static inline int frobtwo_popcount64(unsigned long long x) { return __builtin_popcountll(x); }
    """
    int frobtwo_popcount64(unsigned long long x) nogil

BACKEND = "cython"


def srg_profile(adj):
    cdef const unsigned char[:, ::1] a = np.ascontiguousarray(adj, dtype=np.uint8)
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t words = (n + 63) // 64
    cdef Py_ssize_t i, j, t
    cdef long long deg = -1, d, c
    cdef long long lam_lo = -1, lam_hi = -1, mu_lo = -1, mu_hi = -1
    if n == 0:
        return (-1, -1, -1, -1, -1)
    bits_arr = np.zeros((n, words), dtype=np.uint64)
    cdef uint64_t[:, ::1] bits = bits_arr
    for i in range(n):
        d = 0
        for j in range(n):
            if a[i, j]:
                bits[i, j >> 6] |= (<uint64_t>1) << (j & 63)
                d += 1
        if i == 0:
            deg = d
        elif d != deg:
            return (-1, -1, -1, -1, -1)
    with nogil:
        for i in range(n):
            for j in range(i + 1, n):
                c = 0
                for t in range(words):
                    c += frobtwo_popcount64(bits[i, t] & bits[j, t])
                if a[i, j]:
                    if lam_lo < 0 or c < lam_lo:
                        lam_lo = c
                    if c > lam_hi:
                        lam_hi = c
                else:
                    if mu_lo < 0 or c < mu_lo:
                        mu_lo = c
                    if c > mu_hi:
                        mu_hi = c
    return (deg, lam_lo, lam_hi, mu_lo, mu_hi)


def difference_weights(words, add, neg, weights):
    cdef const int32_t[:, ::1] w = np.ascontiguousarray(words, dtype=np.int32)
    cdef const int32_t[:, ::1] ad = np.ascontiguousarray(add, dtype=np.int32)
    cdef const int32_t[::1] ng = np.ascontiguousarray(neg, dtype=np.int32)
    cdef const int64_t[::1] wt = np.ascontiguousarray(weights, dtype=np.int64)
    cdef Py_ssize_t n = w.shape[0], length = w.shape[1], i, j, t
    cdef int64_t s
    out_arr = np.empty((n, n), dtype=np.int64)
    cdef int64_t[:, ::1] out = out_arr
    with nogil:
        for i in range(n):
            for j in range(n):
                s = 0
                for t in range(length):
                    s += wt[ad[w[i, t], ng[w[j, t]]]]
                out[i, j] = s
    return out_arr


def difference_keys(vectors, add, neg, long long q):
    cdef const int32_t[:, ::1] v = np.ascontiguousarray(vectors, dtype=np.int32)
    cdef const int32_t[:, ::1] ad = np.ascontiguousarray(add, dtype=np.int32)
    cdef const int32_t[::1] ng = np.ascontiguousarray(neg, dtype=np.int32)
    cdef Py_ssize_t m = v.shape[0], k = v.shape[1], i, j, t
    cdef int64_t key
    out_arr = np.empty(m * m, dtype=np.int64)
    cdef int64_t[::1] out = out_arr
    with nogil:
        for i in range(m):
            for j in range(m):
                key = 0
                for t in range(k):
                    key = key * q + ad[v[i, t], ng[v[j, t]]]
                out[i * m + j] = key
    return out_arr


def cayley_adjacency(vectors, add, neg, long long q, mask):
    cdef const int32_t[:, ::1] v = np.ascontiguousarray(vectors, dtype=np.int32)
    cdef const int32_t[:, ::1] ad = np.ascontiguousarray(add, dtype=np.int32)
    cdef const int32_t[::1] ng = np.ascontiguousarray(neg, dtype=np.int32)
    cdef const unsigned char[::1] mk = np.ascontiguousarray(mask, dtype=np.uint8)
    cdef Py_ssize_t m = v.shape[0], k = v.shape[1], i, j, t
    cdef int64_t key
    out_arr = np.empty((m, m), dtype=np.uint8)
    cdef unsigned char[:, ::1] out = out_arr
    with nogil:
        for i in range(m):
            for j in range(m):
                key = 0
                for t in range(k):
                    key = key * q + ad[v[i, t], ng[v[j, t]]]
                out[i, j] = mk[key]
    return out_arr
