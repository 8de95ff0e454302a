# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops. Same signatures and results as ``_kernels_py``.

The loops run without the GIL so callers can split work across threads.
"""

import numpy as np

from libc.stdint cimport int32_t, int64_t, uint64_t
from libc.stdlib cimport free, malloc

cdef uint64_t GOLDEN = 0x9E3779B97F4A7C15ULL


cdef inline uint64_t mix64(uint64_t z) noexcept nogil:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL
    return z ^ (z >> 31)


cdef int64_t _odometer(const int32_t[:, ::1] comm, const int32_t[::1] first,
                       const int32_t[::1] hmem, int n, const int64_t[::1] csize,
                       bint literal) noexcept nogil:
    # enumerate first x H^(n-1), keeping the prefix commutators on a stack
    cdef Py_ssize_t order = comm.shape[0], m = hmem.shape[0], nf = first.shape[0]
    cdef Py_ssize_t *idx = <Py_ssize_t *> malloc(n * sizeof(Py_ssize_t))
    cdef int32_t *pre = <int32_t *> malloc(n * sizeof(int32_t))
    cdef int64_t acc = 0
    cdef Py_ssize_t k, g
    cdef int32_t v
    if nf == 0:
        free(idx)
        free(pre)
        return 0
    for k in range(n):
        idx[k] = 0
    pre[0] = first[0]
    for k in range(1, n):
        pre[k] = comm[pre[k - 1], hmem[0]]
    while True:
        v = pre[n - 1]
        if literal:
            for g in range(order):
                if comm[v, g] == 0:
                    acc += 1
        else:
            acc += csize[v]
        k = n - 1
        while k >= 0:
            idx[k] += 1
            if idx[k] < (nf if k == 0 else m):
                break
            idx[k] = 0
            k -= 1
        if k < 0:
            break
        if k == 0:
            pre[0] = first[idx[0]]
            k = 1
        for k in range(k, n):
            pre[k] = comm[pre[k - 1], hmem[idx[k]]]
    free(idx)
    free(pre)
    return acc


def count_bruteforce(const int32_t[:, ::1] comm, const int32_t[::1] first,
                     const int32_t[::1] hmem, int n):
    cdef int64_t r
    cdef int64_t[::1] dummy = np.zeros(1, dtype=np.int64)
    with nogil:
        r = _odometer(comm, first, hmem, n, dummy, True)
    return int(r)


def centralizer_sum(const int32_t[:, ::1] comm, const int32_t[::1] first,
                    const int32_t[::1] hmem, int n, const int64_t[::1] csize):
    cdef int64_t r
    with nogil:
        r = _odometer(comm, first, hmem, n, csize, False)
    return int(r)


def dp_step(const int32_t[:, ::1] comm, const int64_t[::1] counts, const int32_t[::1] hmem):
    cdef Py_ssize_t order = comm.shape[0], m = hmem.shape[0], v, j
    out_arr = np.zeros(order, dtype=np.int64)
    cdef int64_t[::1] out = out_arr
    cdef int64_t c
    with nogil:
        for v in range(order):
            c = counts[v]
            if c != 0:
                for j in range(m):
                    out[comm[v, hmem[j]]] += c
    return out_arr


cdef inline Py_ssize_t _uniform(uint64_t key, uint64_t *j, uint64_t mod) noexcept nogil:
    cdef uint64_t threshold = (0 - mod) % mod
    cdef uint64_t bits
    while True:
        j[0] += 1
        bits = mix64(key + GOLDEN * j[0])
        if bits >= threshold:
            return <Py_ssize_t> (bits % mod)


def mc_hits(const int32_t[:, ::1] table, const int32_t[::1] inv, const int32_t[::1] hmem,
            int n, seed, Py_ssize_t start, Py_ssize_t stop):
    cdef uint64_t s = <uint64_t> (int(seed) & 0xFFFFFFFFFFFFFFFF)
    cdef uint64_t m = hmem.shape[0], order = table.shape[0]
    cdef uint64_t key, j
    cdef Py_ssize_t i, step
    cdef int32_t v, x
    cdef int64_t hits = 0
    with nogil:
        for i in range(start, stop):
            key = mix64(s + GOLDEN * (<uint64_t> i + 1))
            j = 0
            v = hmem[_uniform(key, &j, m)]
            for step in range(n):
                if step == n - 1:
                    x = <int32_t> _uniform(key, &j, order)
                else:
                    x = hmem[_uniform(key, &j, m)]
                v = table[table[inv[v], inv[x]], table[v, x]]
            if v == 0:
                hits += 1
    return int(hits)
