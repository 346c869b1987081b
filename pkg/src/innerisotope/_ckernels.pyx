# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_pykernels``."""
import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, free

ctypedef long long i64


def scan_idempotents(sc, long long p):
    """Odometer scan over F_p^n; products use only the nonzero structure constants."""
    cdef cnp.ndarray[i64, ndim=3, mode="c"] a = np.ascontiguousarray(sc, dtype=np.int64) % p
    cdef int n = a.shape[0]
    cdef i64 total = 1
    cdef int i, j, k, t
    for i in range(n):
        total *= p
    # nonzero entries grouped by output coordinate k: rows (i, j, value), ranges in start[k]..start[k+1]
    nz = np.argwhere(a != 0)
    order = np.lexsort((nz[:, 1], nz[:, 0], nz[:, 2])) if len(nz) else np.zeros(0, dtype=np.int64)
    nz = nz[order]
    cdef cnp.ndarray[i64, ndim=2, mode="c"] ent = np.ascontiguousarray(
        np.column_stack([nz[:, 0], nz[:, 1], a[nz[:, 0], nz[:, 1], nz[:, 2]]]) if len(nz) else np.zeros((0, 3)),
        dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=1, mode="c"] start = np.ascontiguousarray(
        np.searchsorted(nz[:, 2], np.arange(n + 1)) if len(nz) else np.zeros(n + 1), dtype=np.int64)
    cdef i64 *x = <i64 *> malloc(n * sizeof(i64))
    cdef i64 acc, idx
    cdef bint ok
    found = []
    try:
        for i in range(n):
            x[i] = 0
        for idx in range(total):
            ok = True
            for k in range(n):
                acc = 0
                for t in range(start[k], start[k + 1]):
                    acc += ((x[ent[t, 0]] * x[ent[t, 1]]) % p) * ent[t, 2] % p
                if acc % p != x[k]:
                    ok = False
                    break
            if ok:
                found.append(tuple([x[i] for i in range(n)]))
            # odometer increment, last coordinate fastest
            i = n - 1
            while i >= 0:
                x[i] += 1
                if x[i] < p:
                    break
                x[i] = 0
                i -= 1
    finally:
        free(x)
    return found


def quasigroup_automorphisms(table):
    cdef cnp.ndarray[i64, ndim=2, mode="c"] t = np.ascontiguousarray(table, dtype=np.int64)
    cdef int N = t.shape[0]
    cdef int *g = <int *> malloc(N * sizeof(int))
    cdef int i, j, k, l, tmp
    cdef bint ok
    out = []
    try:
        for i in range(N):
            g[i] = i
        while True:
            ok = True
            for i in range(N):
                for j in range(i, N):
                    if g[t[i, j]] != t[g[i], g[j]]:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                out.append(tuple([g[i] for i in range(N)]))
            # next lexicographic permutation
            k = N - 2
            while k >= 0 and g[k] >= g[k + 1]:
                k -= 1
            if k < 0:
                break
            l = N - 1
            while g[l] <= g[k]:
                l -= 1
            tmp = g[k]; g[k] = g[l]; g[l] = tmp
            i = k + 1
            j = N - 1
            while i < j:
                tmp = g[i]; g[i] = g[j]; g[j] = tmp
                i += 1
                j -= 1
    finally:
        free(g)
    return out
