"""Finite-dimensional commutative algebras over F_p as structure-constant cubes.

Conventions
-----------
* ``sc[i, j, k]`` is the coefficient of e_k in e_i * e_j (0-based indices).
* Linear maps are n×n residue matrices acting on column vectors.
* ``perm_map(σ)`` sends x to (x_σ(1), ..., x_σ(n)). For the shift
  σ = [2, 3, ..., n, 1] the isotope idempotent equation is x_{i+1}^2 = x_i
  and e_1 * e_1 = e_n.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from . import linalg as la
from .errors import (
    DegreeMismatch,
    FieldMismatch,
    InvalidInput,
    NotAutomorphism,
)
from .field import PrimeField, check_admissible, primitive_root_of_order
from .perm import Permutation, cycle_decomposition


@dataclass(frozen=True, eq=False)
class Algebra:
    field: PrimeField
    sc: np.ndarray
    provenance: str = "custom"

    def __post_init__(self):
        sc = np.asarray(self.sc, dtype=np.int64) % self.field.p
        if sc.ndim != 3 or len(set(sc.shape)) != 1:
            raise InvalidInput(f"structure constants must be an n×n×n cube, got {sc.shape}")
        if not np.array_equal(sc, sc.transpose(1, 0, 2)):
            raise InvalidInput("structure constants are not commutative")
        sc.setflags(write=False)
        object.__setattr__(self, "sc", sc)

    @property
    def n(self) -> int:
        return self.sc.shape[0]

    @property
    def p(self) -> int:
        return self.field.p

    def vec(self, x) -> np.ndarray:
        return np.asarray(x, dtype=np.int64) % self.p

    def basis(self, i: int) -> np.ndarray:
        e = np.zeros(self.n, dtype=np.int64)
        e[i] = 1
        return e

    def mul(self, x, y) -> np.ndarray:
        x, y = self.vec(x), self.vec(y)
        xy = np.outer(x, y) % self.p
        return (xy.reshape(-1) @ self.sc.reshape(self.n * self.n, self.n)) % self.p

    def left_mult(self, a) -> np.ndarray:
        """Matrix of x -> a * x."""
        a = self.vec(a)
        return np.einsum("i,ijk->kj", a, self.sc) % self.p

    def is_idempotent(self, c) -> bool:
        return np.array_equal(self.mul(c, c), self.vec(c))

    def same_as(self, other: Algebra) -> bool:
        return self.field == other.field and np.array_equal(self.sc, other.sc)

    def to_json(self):
        return self.sc.tolist()

    def __repr__(self):
        return f"Algebra(n={self.n}, p={self.p}, provenance={self.provenance!r})"


def product_algebra(n: int, F: PrimeField) -> Algebra:
    """K^n with coordinate-wise multiplication."""
    sc = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        sc[i, i, i] = 1
    return Algebra(F, sc, "product")


def zero_algebra(F: PrimeField) -> Algebra:
    return Algebra(F, np.zeros((0, 0, 0), dtype=np.int64), "zero")


def perm_map(sigma: Permutation, F: PrimeField | None = None) -> np.ndarray:
    """(ψ_σ x)_i = x_σ(i) as a permutation matrix."""
    n = sigma.n
    M = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        M[i, sigma(i + 1) - 1] = 1
    return M


def transform(A: Algebra, M, provenance: str) -> Algebra:
    """Algebra with product x ∗ y = M(x • y)."""
    M = la.asmat(M, A.p)
    return Algebra(A.field, np.einsum("kl,ijl->ijk", M, A.sc) % A.p, provenance)


def is_isomorphism(A: Algebra, B: Algebra, M) -> bool:
    """True iff M is invertible and M(e_i * e_j) = M e_i * M e_j for all basis pairs."""
    if A.n != B.n or A.field != B.field:
        return False
    M = la.asmat(M, A.p)
    if M.shape != (A.n, A.n) or la.det(M, A.p) == 0:
        return False
    lhs = np.einsum("kl,ijl->ijk", M, A.sc) % A.p
    # (M e_i) * (M e_j) = sum_{a,b} M[a,i] M[b,j] sc_B[a,b,:]
    half = np.einsum("ai,abk->ibk", M, B.sc) % A.p
    rhs = np.einsum("bj,ibk->ijk", M, half) % A.p
    return np.array_equal(lhs, rhs)


def is_automorphism(A: Algebra, M) -> bool:
    return is_isomorphism(A, A, M)


def inner_isotope(A: Algebra, h, provenance: str | None = None) -> Algebra:
    """The algebra x ∗ y = h(x • y); h must be an automorphism of A."""
    if not is_automorphism(A, h):
        raise NotAutomorphism("h is not an automorphism of the base algebra")
    return transform(A, h, provenance or "isotope")


def isotope(sigma: Permutation, F: PrimeField) -> Algebra:
    """(K^n, •_σ): the inner isotope of the product algebra by ψ_σ."""
    return inner_isotope(product_algebra(sigma.n, F), perm_map(sigma), f"isotope[{sigma}]")


def direct_sum(A: Algebra, B: Algebra) -> Algebra:
    if A.field != B.field:
        raise FieldMismatch("direct sum of algebras over different fields")
    n, m = A.n, B.n
    sc = np.zeros((n + m, n + m, n + m), dtype=np.int64)
    sc[:n, :n, :n] = A.sc
    sc[n:, n:, n:] = B.sc
    return Algebra(A.field, sc, "direct_sum")


@dataclass
class CycleDecomposition:
    """Blocks of an isotope along the cycles of σ.

    ``order`` lists the original coordinates (1-based) in block order, and
    ``relabel`` is the matrix x -> (x_order[0], x_order[1], ...), an algebra
    isomorphism from the isotope onto ``direct_sum(*blocks)``.
    """

    cycles: list[list[int]]
    blocks: list[Algebra]
    order: list[int]
    relabel: np.ndarray
    total: Algebra = field(repr=False)


def decompose_by_cycles(sigma: Permutation, F: PrimeField) -> CycleDecomposition:
    check_admissible(sigma.cycle_type(), F)
    cycles = cycle_decomposition(sigma)
    blocks = [isotope(Permutation.shift(len(c)), F) for c in cycles]
    order = [i for c in cycles for i in c]
    R = perm_map(Permutation(tuple(order)))
    total = blocks[0]
    for b in blocks[1:]:
        total = direct_sum(total, b)
    if not is_isomorphism(isotope(sigma, F), total, R):
        raise AssertionError("cycle decomposition failed to verify")  # unreachable
    return CycleDecomposition(cycles, blocks, order, R, total)


def char_poly(M, F: PrimeField) -> list[int]:
    return la.char_poly(M, F.p)


@dataclass
class IdentityReport:
    commutative: bool
    associative: bool
    medial: bool
    unital: bool
    unit: list[int] | None = None
    witnesses: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "commutative": self.commutative,
            "associative": self.associative,
            "medial": self.medial,
            "unital": self.unital,
            "unit": self.unit,
            "witnesses": self.witnesses,
        }


def check_identities(A: Algebra) -> IdentityReport:
    """Check the defining identities on basis tuples and look for a unit.

    All identities are multilinear, so basis tuples suffice. Witnesses are
    0-based index tuples.
    """
    p, n, sc = A.p, A.n, A.sc
    witnesses = {}
    comm = np.argwhere(sc != sc.transpose(1, 0, 2))
    commutative = len(comm) == 0
    if not commutative:
        witnesses["commutative"] = [int(v) for v in comm[0][:2]]

    # left[i,j,k,:] = (e_i e_j) e_k ; right[i,j,k,:] = e_i (e_j e_k)
    left = np.einsum("ija,akl->ijkl", sc, sc) % p
    right = np.einsum("jka,ial->ijkl", sc, sc) % p
    bad = np.argwhere(np.any(left != right, axis=3))
    associative = len(bad) == 0
    if not associative:
        witnesses["associative"] = [int(v) for v in bad[0]]

    # (e_i e_j)(e_k e_l) vs (e_i e_k)(e_j e_l)
    half = np.einsum("ija,abm->ijbm", sc, sc) % p
    pair = np.einsum("klb,ijbm->ijklm", sc, half) % p
    swapped = pair.transpose(0, 2, 1, 3, 4)
    bad = np.argwhere(np.any(pair != swapped, axis=4))
    medial = len(bad) == 0
    if not medial:
        witnesses["medial"] = [int(v) for v in bad[0]]

    unit = find_unit(A)
    return IdentityReport(
        commutative, associative, medial, unit is not None,
        None if unit is None else [int(v) for v in unit], witnesses,
    )


def find_unit(A: Algebra):
    """Solve L(e) = I; L is linear in e so this is an n^2 × n linear system."""
    p, n = A.p, A.n
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    # column i of the system: vec(L(e_i)) = sc[i] transposed
    system = np.stack([A.sc[i].T.reshape(-1) for i in range(n)], axis=1) % p
    target = la.identity(n).reshape(-1)
    R, pivots = la.row_reduce(np.hstack([system, target[:, None]]), p)
    if n in pivots:
        return None
    e = np.zeros(n, dtype=np.int64)
    for row, c in enumerate(pivots):
        e[c] = R[row, n]
    return e if np.array_equal(A.left_mult(e), la.identity(n)) else None


@dataclass
class PolyModel:
    """K[z]/(z^n - 1) in the power basis 1, z, ..., z^(n-1).

    ``substitution`` is p(z) -> p(εz); ``evaluation`` is the Vandermonde map
    p -> (p(1), p(ε), ..., p(ε^(n-1))) onto the product algebra.
    """

    algebra: Algebra
    eps: int
    substitution: np.ndarray
    evaluation: np.ndarray

    def isotope(self) -> Algebra:
        return inner_isotope(self.algebra, self.substitution, "poly_model_isotope")


def poly_model(n: int, F: PrimeField) -> PolyModel:
    if (F.p - 1) % n:
        raise InvalidInput(f"F_{F.p} has no primitive root of order {n}")
    p = F.p
    sc = np.zeros((n, n, n), dtype=np.int64)
    for i, j in product(range(n), repeat=2):
        sc[i, j, (i + j) % n] = 1
    A = Algebra(F, sc, "poly_model")
    eps = primitive_root_of_order(n, F).residue
    S = np.diag([pow(eps, j, p) for j in range(n)]).astype(np.int64)
    V = np.array([[pow(eps, i * j, p) for j in range(n)] for i in range(n)], dtype=np.int64)
    if not is_automorphism(A, S) or not is_isomorphism(A, product_algebra(n, F), V):
        raise AssertionError("polynomial model failed to verify")  # unreachable
    return PolyModel(A, eps, S, V)


def same_degree(sigma: Permutation, tau: Permutation):
    if sigma.n != tau.n:
        raise DegreeMismatch(f"degrees differ: {sigma.n} vs {tau.n}")
