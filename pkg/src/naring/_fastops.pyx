# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot full-ring scans."""

import numpy as np

cimport numpy as cnp

BACKEND = "compiled"


def all_vectors(int m, int k):
    cdef long long n = 1
    for _ in range(k):
        n *= m
    codes = np.arange(n, dtype=np.int64)
    out = np.empty((n, k), dtype=np.int64)
    for i in range(k):
        out[:, i] = codes % m
        codes //= m
    return out


def convolve(x, y, table, int m):
    cdef int k = len(x)
    cdef cnp.int64_t[:] xv = np.ascontiguousarray(x, dtype=np.int64)
    cdef cnp.int64_t[:] yv = np.ascontiguousarray(y, dtype=np.int64)
    cdef cnp.int64_t[:, :] tv = np.ascontiguousarray(table, dtype=np.int64)
    out = np.zeros(k, dtype=np.int64)
    cdef cnp.int64_t[:] ov = out
    cdef int i, j
    for i in range(k):
        if xv[i] == 0:
            continue
        for j in range(k):
            ov[tv[i, j]] += xv[i] * yv[j]
    for i in range(k):
        ov[i] = ov[i] % m
    return out


def scan_circle_zero(table, int m):
    cdef cnp.int64_t[:, :] tv = np.ascontiguousarray(table, dtype=np.int64)
    cdef int k = tv.shape[0]
    cdef long long n = 1
    cdef int i, j, t
    for i in range(k):
        n *= m
    vecs = all_vectors(m, k)
    cdef cnp.int64_t[:, :] vv = vecs
    rqr = np.full(n, -1, dtype=np.int64)
    lqr = np.full(n, -1, dtype=np.int64)
    cdef cnp.int64_t[:] rv = rqr
    cdef cnp.int64_t[:] lv = lqr
    cdef long long x, y
    cdef cnp.int64_t[:] prod = np.zeros(k, dtype=np.int64)
    cdef bint zero
    for x in range(n):
        for y in range(n):
            for i in range(k):
                prod[i] = 0
            for i in range(k):
                if vv[x, i] == 0:
                    continue
                for j in range(k):
                    prod[tv[i, j]] += vv[x, i] * vv[y, j]
            zero = True
            for i in range(k):
                t = <int>((vv[x, i] + vv[y, i] - prod[i]) % m)
                if t != 0:
                    zero = False
                    break
            if zero:
                if rv[x] == -1:
                    rv[x] = y
                if lv[y] == -1:
                    lv[y] = x
    return rqr, lqr


def square_codes(table, int m):
    cdef cnp.int64_t[:, :] tv = np.ascontiguousarray(table, dtype=np.int64)
    cdef int k = tv.shape[0]
    cdef long long n = 1
    cdef int i, j
    for i in range(k):
        n *= m
    vecs = all_vectors(m, k)
    cdef cnp.int64_t[:, :] vv = vecs
    out = np.empty(n, dtype=np.int64)
    cdef cnp.int64_t[:] ov = out
    cdef cnp.int64_t[:] sq = np.zeros(k, dtype=np.int64)
    cdef long long x, code, w
    for x in range(n):
        for i in range(k):
            sq[i] = 0
        for i in range(k):
            if vv[x, i] == 0:
                continue
            for j in range(k):
                sq[tv[i, j]] += vv[x, i] * vv[x, j]
        code = 0
        w = 1
        for i in range(k):
            code += (sq[i] % m) * w
            w *= m
        ov[x] = code
    return out


def jordan_counterexample(table, int m):
    cdef cnp.int64_t[:, :] tv = np.ascontiguousarray(table, dtype=np.int64)
    cdef int k = tv.shape[0]
    cdef long long n = 1
    cdef int i, j
    for i in range(k):
        n *= m
    vecs = all_vectors(m, k)
    cdef cnp.int64_t[:, :] vv = vecs
    cdef cnp.int64_t[:] a2 = np.zeros(k, dtype=np.int64)
    cdef cnp.int64_t[:] ab = np.zeros(k, dtype=np.int64)
    cdef cnp.int64_t[:] lhs = np.zeros(k, dtype=np.int64)
    cdef cnp.int64_t[:] a2b = np.zeros(k, dtype=np.int64)
    cdef cnp.int64_t[:] rhs = np.zeros(k, dtype=np.int64)
    cdef long long a, b
    cdef bint bad
    for a in range(n):
        for i in range(k):
            a2[i] = 0
        for i in range(k):
            if vv[a, i] == 0:
                continue
            for j in range(k):
                a2[tv[i, j]] += vv[a, i] * vv[a, j]
        for i in range(k):
            a2[i] = a2[i] % m
        for b in range(n):
            for i in range(k):
                ab[i] = 0
                a2b[i] = 0
                lhs[i] = 0
                rhs[i] = 0
            for i in range(k):
                for j in range(k):
                    ab[tv[i, j]] += vv[a, i] * vv[b, j]
                    a2b[tv[i, j]] += a2[i] * vv[b, j]
            for i in range(k):
                ab[i] = ab[i] % m
                a2b[i] = a2b[i] % m
            for i in range(k):
                for j in range(k):
                    lhs[tv[i, j]] += a2[i] * ab[j]
                    rhs[tv[i, j]] += vv[a, i] * a2b[j]
            bad = False
            for i in range(k):
                if (lhs[i] - rhs[i]) % m != 0:
                    bad = True
                    break
            if bad:
                return (a, b)
    return None
