"""Pure Python/numpy implementations of the hot kernels.

These define the reference behaviour; ``_ckernels.pyx`` must agree with
them result for result.
"""
from itertools import permutations

import numpy as np

_CHUNK = 1 << 16


def scan_idempotents(sc, p):
    """All x in F_p^n with x*x == x, in lexicographic order of coordinates.

    ``sc[i, j, k]`` is the e_k coefficient of e_i * e_j.
    """
    sc = np.asarray(sc, dtype=np.int64)
    n = sc.shape[0]
    total = p**n
    found = []
    weights = p ** np.arange(n - 1, -1, -1, dtype=np.int64)
    flat = sc.reshape(n * n, n)
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        x = (idx[:, None] // weights[None, :]) % p
        xx = (x[:, :, None] * x[:, None, :]) % p
        sq = (xx.reshape(len(idx), n * n) @ flat) % p
        hit = np.all(sq == x, axis=1)
        found.extend(tuple(int(v) for v in row) for row in x[hit])
    return found


def quasigroup_automorphisms(table):
    """Every bijection g of {0..N-1} with g(t[i][j]) == t[g(i)][g(j)], lexicographic."""
    t = [list(map(int, row)) for row in np.asarray(table)]
    N = len(t)
    pairs = [(i, j) for i in range(N) for j in range(i, N)]
    out = []
    for g in permutations(range(N)):
        for i, j in pairs:
            if g[t[i][j]] != t[g[i]][g[j]]:
                break
        else:
            out.append(g)
    return out
