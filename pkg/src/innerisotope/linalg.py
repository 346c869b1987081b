"""Dense linear algebra over F_p on numpy int64 residue arrays.

Matrices act on column vectors. Elimination uses the first nonzero pivot;
the field is exact so no pivoting strategy is needed.
"""
from __future__ import annotations

import numpy as np

from .errors import FieldTooSmall, NotInvertible


def asmat(M, p: int) -> np.ndarray:
    return np.asarray(M, dtype=np.int64) % p


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matmul(A, B, p: int) -> np.ndarray:
    return (np.asarray(A, dtype=np.int64) @ np.asarray(B, dtype=np.int64)) % p


def matvec(A, x, p: int) -> np.ndarray:
    return (np.asarray(A, dtype=np.int64) @ np.asarray(x, dtype=np.int64)) % p


def matpow(A, k: int, p: int) -> np.ndarray:
    result = identity(len(A))
    base = asmat(A, p)
    while k:
        if k & 1:
            result = matmul(result, base, p)
        base = matmul(base, base, p)
        k >>= 1
    return result


def row_reduce(M, p: int):
    """Reduced row echelon form; returns (R, pivot_columns)."""
    R = asmat(M, p).copy()
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if len(nz) == 0:
            continue
        k = r + nz[0]
        if k != r:
            R[[r, k]] = R[[k, r]]
        R[r] = (R[r] * pow(int(R[r, c]), -1, p)) % p
        for i in range(rows):
            if i != r and R[i, c]:
                R[i] = (R[i] - R[i, c] * R[r]) % p
        pivots.append(c)
        r += 1
    return R, pivots


def rank(M, p: int) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(row_reduce(M, p)[1])


def det(M, p: int) -> int:
    A = asmat(M, p).copy()
    n = len(A)
    result = 1
    for c in range(n):
        nz = np.nonzero(A[c:, c])[0]
        if len(nz) == 0:
            return 0
        k = c + nz[0]
        if k != c:
            A[[c, k]] = A[[k, c]]
            result = -result
        piv = int(A[c, c])
        result = (result * piv) % p
        inv = pow(piv, -1, p)
        for i in range(c + 1, n):
            if A[i, c]:
                A[i] = (A[i] - (A[i, c] * inv % p) * A[c]) % p
    return result % p


def inverse(M, p: int) -> np.ndarray:
    A = asmat(M, p)
    n = len(A)
    R, pivots = row_reduce(np.hstack([A, identity(n)]), p)
    if pivots[:n] != list(range(n)):
        raise NotInvertible("matrix is singular")
    return R[:, n:]


def solve(A, B, p: int) -> np.ndarray:
    """Solve A X = B for square invertible A (B a vector or a matrix)."""
    return matmul(inverse(A, p), B, p)


def nullspace(M, p: int) -> list[np.ndarray]:
    """A basis of {x : M x = 0}."""
    M = asmat(M, p)
    cols = M.shape[1]
    R, pivots = row_reduce(M, p)
    basis = []
    for free in (c for c in range(cols) if c not in pivots):
        v = np.zeros(cols, dtype=np.int64)
        v[free] = 1
        for row, pc in enumerate(pivots):
            v[pc] = (-R[row, free]) % p
        basis.append(v)
    return basis


def in_span(vectors, v, p: int) -> bool:
    if not len(vectors):
        return not np.any(np.asarray(v) % p)
    base = np.array(vectors, dtype=np.int64)
    return rank(np.vstack([base, v]), p) == rank(base, p)


# --- polynomials over F_p, coefficient lists with the constant term first ---

def poly_trim(c) -> list[int]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def poly_mul(a, b, p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return poly_trim(out)


def poly_eval(c, x: int, p: int) -> int:
    acc = 0
    for coeff in reversed(c):
        acc = (acc * x + coeff) % p
    return acc


def interpolate(xs, ys, p: int) -> list[int]:
    """Lagrange interpolation through (xs[i], ys[i]) over F_p."""
    result = [0] * len(xs)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        num = [1]
        denom = 1
        for j, xj in enumerate(xs):
            if j != i:
                num = poly_mul(num, [(-xj) % p, 1], p) or [0]
                denom = denom * (xi - xj) % p
        scale = yi * pow(denom, -1, p) % p
        for k, c in enumerate(num):
            result[k] = (result[k] + scale * c) % p
    return poly_trim(result)


def char_poly(M, p: int) -> list[int]:
    """Characteristic polynomial det(xI - M), constant term first, monic.

    Evaluates the determinant at x = 0..n and interpolates, so p > n is needed.
    """
    M = asmat(M, p)
    n = len(M)
    if p <= n:
        raise FieldTooSmall(f"interpolation needs p > n (p={p}, n={n})")
    xs = list(range(n + 1))
    ys = [det((x * identity(n) - M) % p, p) for x in xs]
    coeffs = interpolate(xs, ys, p)
    coeffs += [0] * (n + 1 - len(coeffs))
    if coeffs[-1] != 1:
        raise AssertionError("characteristic polynomial not monic")  # unreachable
    return coeffs


def poly_roots(c, p: int) -> list[int]:
    """All roots in F_p by scanning every residue."""
    return [x for x in range(p) if poly_eval(c, x, p) == 0]


def format_poly(c, var: str = "λ", p: int | None = None) -> str:
    """Human-readable form; with p given, residues above p/2 print as negatives."""
    out = ""
    for k in range(len(c) - 1, -1, -1):
        a = c[k]
        if p is not None and a > p // 2:
            a -= p
        if not a:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        body = str(abs(a)) if k == 0 else (mono if abs(a) == 1 else f"{abs(a)}{mono}")
        if not out:
            out = ("-" if a < 0 else "") + body
        else:
            out += (" - " if a < 0 else " + ") + body
    return out or "0"
