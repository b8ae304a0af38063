# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled counting kernels; same contract as ``_kernels_py``.

Callers guarantee every intermediate fits in a signed 64-bit integer.
"""
from libc.stdlib cimport malloc, calloc, free


cdef long long _enum(long long* w, int n, int depth, long long rem,
                     long long* iters, long long max_iter) nogil:
    cdef long long m, count = 0, top, count_sub
    top = rem // w[depth]
    if depth == n - 1:
        iters[0] += top + 1
        return top + 1
    for m in range(top + 1):
        iters[0] += 1
        if iters[0] > max_iter:
            return -1
        count_sub = _enum(w, n, depth + 1, rem - m * w[depth], iters, max_iter)
        if count_sub < 0:
            return -1
        count += count_sub
    return count


def count_weighted(weights, long long cap, long long lower, long long max_iter):
    cdef int n = len(weights)
    cdef int k
    cdef long long iters = 0, count
    cdef long long* w
    if cap < 0:
        return 0, 0
    for k in range(n):
        cap -= lower * <long long>weights[k]
    if cap < 0:
        return 0, 0
    w = <long long*>malloc(n * sizeof(long long))
    try:
        for k in range(n):
            w[k] = weights[k]
        with nogil:
            count = _enum(w, n, 0, cap, &iters, max_iter)
        if count >= 0 and iters > max_iter:
            count = -1
        return count, iters
    finally:
        free(w)


def count_box(rows, rhs, bounds, long long max_iter):
    cdef int n = len(bounds)
    cdef int q = len(rows)
    cdef int j, k
    cdef long long total = 1, count = 0, iters = 0, s
    cdef bint ok
    cdef long long* a
    cdef long long* r
    cdef long long* b
    cdef long long* x
    for k in range(n):
        total *= <long long>bounds[k] + 1
        if total > max_iter:
            return -1, 0
    a = <long long*>malloc(q * n * sizeof(long long))
    r = <long long*>malloc(q * sizeof(long long))
    b = <long long*>malloc(n * sizeof(long long))
    x = <long long*>calloc(n, sizeof(long long))
    try:
        for j in range(q):
            r[j] = rhs[j]
            for k in range(n):
                a[j * n + k] = rows[j][k]
        for k in range(n):
            b[k] = bounds[k]
        with nogil:
            while True:
                iters += 1
                ok = True
                for j in range(q):
                    s = 0
                    for k in range(n):
                        s += a[j * n + k] * x[k]
                    if s > r[j]:
                        ok = False
                        break
                if ok:
                    count += 1
                k = 0
                while k < n:
                    if x[k] < b[k]:
                        x[k] += 1
                        break
                    x[k] = 0
                    k += 1
                if k == n:
                    break
        return count, iters
    finally:
        free(a)
        free(r)
        free(b)
        free(x)


def count_denumerant(weights, long long target, long long max_iter):
    cdef int n = len(weights)
    cdef int k
    cdef long long e, w, work
    cdef long long* c
    if target < 0:
        return 0, 0
    work = (n + 1) * (target + 1)
    if work > max_iter:
        return -1, 0
    c = <long long*>malloc((target + 1) * sizeof(long long))
    try:
        for e in range(target + 1):
            c[e] = 1
        for k in range(n):
            w = weights[k]
            with nogil:
                for e in range(w, target + 1):
                    c[e] += c[e - w]
        return c[target], work
    finally:
        free(c)
