# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(p) matrix kernels (hot path of every Hom-space solve).

Mirrors `_gfpure`; p < 2^31 keeps products inside int64.
"""

from libc.stdlib cimport malloc, free

BACKEND = "cython"


cdef long long _inv_mod(long long a, long long p):
    cdef long long result = 1
    cdef long long base = a % p
    cdef long long e = p - 2
    while e > 0:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


def matmul_mod(a, b, Py_ssize_t n, Py_ssize_t m, Py_ssize_t k, long long p):
    cdef long long *am = <long long *> malloc(n * m * sizeof(long long))
    cdef long long *bm = <long long *> malloc(m * k * sizeof(long long))
    cdef long long *om = <long long *> malloc(n * k * sizeof(long long))
    if am == NULL or bm == NULL or om == NULL:
        free(am); free(bm); free(om)
        raise MemoryError()
    cdef Py_ssize_t i, j, t
    cdef long long c
    try:
        for i in range(n * m):
            am[i] = a[i]
        for i in range(m * k):
            bm[i] = b[i]
        for i in range(n * k):
            om[i] = 0
        for i in range(n):
            for t in range(m):
                c = am[i * m + t]
                if c:
                    for j in range(k):
                        om[i * k + j] = (om[i * k + j] + c * bm[t * k + j]) % p
        return [om[i] for i in range(n * k)]
    finally:
        free(am); free(bm); free(om)


def rref_mod(entries, Py_ssize_t rows, Py_ssize_t cols, long long p):
    cdef long long *m = <long long *> malloc(max(rows * cols, 1) * sizeof(long long))
    if m == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, c, r, pivot_row
    cdef long long inv, f, tmp
    pivots = []
    try:
        for i in range(rows * cols):
            m[i] = entries[i]
        r = 0
        for c in range(cols):
            pivot_row = -1
            for i in range(r, rows):
                if m[i * cols + c]:
                    pivot_row = i
                    break
            if pivot_row < 0:
                continue
            if pivot_row != r:
                for j in range(cols):
                    tmp = m[r * cols + j]
                    m[r * cols + j] = m[pivot_row * cols + j]
                    m[pivot_row * cols + j] = tmp
            inv = _inv_mod(m[r * cols + c], p)
            if inv != 1:
                for j in range(c, cols):
                    m[r * cols + j] = m[r * cols + j] * inv % p
            for i in range(rows):
                if i == r:
                    continue
                f = m[i * cols + c]
                if f:
                    for j in range(c, cols):
                        m[i * cols + j] = (m[i * cols + j] - f * m[r * cols + j]) % p
                        if m[i * cols + j] < 0:
                            m[i * cols + j] += p
            pivots.append(c)
            r += 1
            if r == rows:
                break
        return [m[i] for i in range(rows * cols)], pivots
    finally:
        free(m)
