"""Automorphisms of the idempotent quasigroup and of the isotope algebra itself.

The quasigroup side lives on Z_N, N = 2^n - 1, with i ⊛ j = 2^(n-1)(i + j);
its automorphisms are the affine maps ψ_{m,k}(i) = m i + k. Algebra
automorphisms permute idempotents, and the idempotents span, so each one is
the linear lift of a permutation of idempotents.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from itertools import islice, product

import numpy as np

from . import kernels
from . import linalg as la
from .algebra import Algebra, is_automorphism, is_isomorphism, isotope, perm_map, same_degree
from .errors import CapExceeded, InvalidInput, NotClosed, PropertyViolation, RankDeficient
from .field import PrimeField, check_admissible
from .idem import IdempotentTable, idempotents_formula
from .perm import Permutation, are_conjugate, conjugator

DEFAULT_QUASIGROUP_CAP = math.factorial(8)


@dataclass(frozen=True, order=True)
class AffineMap:
    N: int
    m: int
    k: int

    def __post_init__(self):
        if math.gcd(self.m, self.N) != 1:
            raise InvalidInput(f"{self.m} is not a unit mod {self.N}")
        object.__setattr__(self, "m", self.m % self.N)
        object.__setattr__(self, "k", self.k % self.N)

    def __call__(self, i: int) -> int:
        return (self.m * i + self.k) % self.N

    def compose(self, other: AffineMap) -> AffineMap:
        """(self ∘ other)(i) = self(other(i)) = ψ_{m m', m k' + k}."""
        return AffineMap(self.N, self.m * other.m, self.m * other.k + self.k)

    __mul__ = compose

    def inverse(self) -> AffineMap:
        mi = pow(self.m, -1, self.N)
        return AffineMap(self.N, mi, -mi * self.k)

    def is_identity(self) -> bool:
        return self.m == 1 % self.N and self.k == 0

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(self(i) for i in range(self.N))

    def power(self, e: int) -> AffineMap:
        out = AffineMap(self.N, 1, 0)
        for _ in range(e):
            out = self * out
        return out


def exponent_of(N: int) -> int:
    n = (N + 1).bit_length() - 1
    if N < 1 or 2**n - 1 != N:
        raise InvalidInput(f"N = {N} is not of the form 2^n - 1")
    return n


def star_table(N: int) -> np.ndarray:
    """i ⊛ j on residues mod N."""
    n = exponent_of(N)
    i = np.arange(N)
    return (2 ** (n - 1) * (i[:, None] + i[None, :])) % N


def preserves(table, g) -> bool:
    t = np.asarray(table)
    g = np.asarray(g)
    return np.array_equal(g[t], t[np.ix_(g, g)])


def affine_autos(N: int, table=None) -> list[AffineMap]:
    """All ψ_{m,k}, each verified against the table (default: the ⊛ table)."""
    t = star_table(N) if table is None else np.asarray(table)
    out = []
    for m in range(1, N + 1):
        if math.gcd(m, N) != 1:
            continue
        for k in range(N):
            a = AffineMap(N, m, k)
            if not preserves(t, a.as_tuple()):
                raise PropertyViolation(f"ψ_{{{m},{k}}} does not preserve the table", witness=[m, k])
            out.append(a)
    return sorted(set(out))


def quasigroup_autos_bruteforce(table, cap: int = DEFAULT_QUASIGROUP_CAP) -> set[tuple[int, ...]]:
    """Every bijection g of Z_N with g(i ⊛ j) = g(i) ⊛ g(j), by exhaustive scan."""
    t = np.asarray(table, dtype=np.int64)
    if math.factorial(len(t)) > cap:
        raise CapExceeded(f"{len(t)}! bijections exceed the cap {cap}")
    return set(kernels.quasigroup_automorphisms(t))


@dataclass
class AlgebraAuto:
    matrix: np.ndarray
    affine: AffineMap | None = None
    images: tuple[str, ...] = ()

    def to_dict(self):
        d = {"matrix": self.matrix.tolist(), "images": list(self.images)}
        if self.affine is not None:
            d.update(m=self.affine.m, k=self.affine.k)
        return d


def lift_basis(T: IdempotentTable, n: int) -> list[int]:
    """Indices of the first n linearly independent nonzero idempotents, in label order."""
    p = T.field.p
    chosen = []
    for i, e in enumerate(T.entries):
        if not any(e.code):
            continue
        trial = [T.vectors[j] for j in chosen] + [e.vector]
        if la.rank(np.array(trial), p) == len(trial):
            chosen.append(i)
            if len(chosen) == n:
                return chosen
    raise RankDeficient(f"idempotents span dimension {len(chosen)} < {n}")


def _lift(T: IdempotentTable, binv, targets) -> np.ndarray:
    """The matrix sending basis idempotent i to idempotent targets[i]."""
    B2 = np.array([T.vectors[j] for j in targets], dtype=np.int64).T
    return la.matmul(B2, binv, T.field.p)


def _maps_idempotents(T: IdempotentTable, M, image_of) -> bool:
    V = np.array(T.vectors, dtype=np.int64).T
    W = la.matmul(M, V, T.field.p)
    return all(np.array_equal(W[:, i], np.asarray(T.vectors[image_of(i)])) for i in range(len(T)))


def algebra_autos(A: Algebra, T: IdempotentTable) -> list[AlgebraAuto]:
    """Automorphisms of a single-cycle isotope as lifts of the affine maps of Z_N."""
    if len(T.cycle_lengths) != 1:
        raise InvalidInput("affine lifting needs a single-cycle table; use automorphisms_by_lifting")
    n, p = A.n, A.p
    N = 2**n - 1
    basis = lift_basis(T, n)
    binv = la.inverse(np.array([T.vectors[j] for j in basis]).T, p)
    index = {int(lab) % N: i for i, lab in enumerate(T.labels) if lab != "0"}
    zero = T.index("0")
    out = []
    for a in affine_autos(N):
        def image_of(i, a=a):
            return zero if i == zero else index[a(int(T.labels[i]) % N)]

        M = _lift(T, binv, [image_of(j) for j in basis])
        if _maps_idempotents(T, M, image_of) and is_automorphism(A, M):
            out.append(AlgebraAuto(M, a, tuple(T.labels[image_of(i)] for i in range(len(T)))))
    return out


def lifting_candidates(A: Algebra, T: IdempotentTable) -> tuple[list[int], list[list[int]]]:
    """Basis indices and, for each, the idempotents sharing its characteristic polynomial.

    An automorphism f satisfies L(f c) = f L(c) f⁻¹, so it preserves the
    spectrum of L(c) and can only send c to a spectrally equal idempotent.
    """
    basis = lift_basis(T, A.n)
    polys = [tuple(la.char_poly(A.left_mult(v), A.p)) for v in T.vectors]
    options = [[j for j, e in enumerate(T.entries) if any(e.code) and polys[j] == polys[b]] for b in basis]
    return basis, options


def candidate_count(A: Algebra, T: IdempotentTable) -> int:
    return math.prod(len(o) for o in lifting_candidates(A, T)[1])


def automorphisms_by_lifting(A: Algebra, T: IdempotentTable, batch: int = 4096) -> list[AlgebraAuto]:
    """All automorphisms for any σ: lift every admissible assignment of basis idempotents.

    An automorphism sends nonzero idempotents to spectrally equal nonzero
    idempotents and is fixed by the images of a basis, so the search is
    exhaustive. Lifts are screened in numpy batches: the lifted matrix must
    permute the idempotents; survivors are then checked as automorphisms.
    """
    n, p = A.n, A.p
    basis, options = lifting_candidates(A, T)
    binv = la.inverse(np.array([T.vectors[j] for j in basis]).T, p)
    vecs = np.array(T.vectors, dtype=np.int64)  # (count, n)
    weights = p ** np.arange(n, dtype=np.int64)
    codes = vecs @ weights
    order = np.argsort(codes)
    sorted_codes = codes[order]
    out = []
    assignments = (t for t in product(*options) if len(set(t)) == n)
    while True:
        chunk = list(islice(assignments, batch))
        if not chunk:
            break
        targets = np.array(chunk, dtype=np.int64)  # (K, n)
        B2 = vecs[targets].transpose(0, 2, 1)  # columns are target vectors
        M = np.einsum("kij,jl->kil", B2, binv) % p
        W = np.einsum("kij,cj->kci", M, vecs) % p  # image of every idempotent
        img_codes = W @ weights
        pos = np.searchsorted(sorted_codes, img_codes).clip(0, len(codes) - 1)
        hit = sorted_codes[pos] == img_codes
        ok = hit.all(axis=1)
        for k in np.nonzero(ok)[0]:
            images = order[pos[k]]
            if len(set(images.tolist())) != len(T) or not is_automorphism(A, M[k]):
                continue
            out.append(AlgebraAuto(M[k], None, tuple(T.labels[i] for i in images)))
    return out


@dataclass
class GroupReport:
    order: int
    abelian: bool
    relations_ok: bool | None = None
    isomorphism_type: str | None = None
    details: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "order": self.order,
            "abelian": self.abelian,
            "relations_ok": self.relations_ok,
            "isomorphism_type": self.isomorphism_type,
            "details": self.details,
        }


def group_structure(autos) -> GroupReport:
    """Group data for a set of affine maps, tested against α^n = β^N = 1 with αβα⁻¹ = β²."""
    elems = set(autos)
    if not elems:
        raise InvalidInput("empty set of maps")
    N = next(iter(elems)).N
    n = exponent_of(N)
    for a in elems:
        if a.inverse() not in elems:
            raise NotClosed("not closed under inverses", witness=[a.m, a.k])
        for b in elems:
            if a * b not in elems:
                raise NotClosed("not closed under composition", witness=[[a.m, a.k], [b.m, b.k]])
    abelian = all(a * b == b * a for a in elems for b in elems)
    alpha, beta = AffineMap(N, 2, 0), AffineMap(N, 1, 1)
    relations = {
        "alpha^n = 1": alpha.power(n).is_identity(),
        "beta^N = 1": beta.power(N).is_identity(),
        "alpha beta alpha^-1 = beta^2": alpha * beta * alpha.inverse() == beta * beta,
        "generators present": alpha in elems and beta in elems,
    }
    ok = all(relations.values())
    kind = f"Z_{N} ⋊ Z_{n}" if ok and len(elems) == n * N else None
    return GroupReport(len(elems), abelian, ok, kind, {"relations": relations})


def matrix_group_structure(mats, p: int) -> GroupReport:
    """Order and commutativity of a finite group of matrices, with a closure check."""
    keys = {np.asarray(M).tobytes(): np.asarray(M) for M in mats}
    for a in keys.values():
        for b in keys.values():
            if la.matmul(a, b, p).tobytes() not in keys:
                raise NotClosed("matrix set not closed under multiplication")
    vals = list(keys.values())
    abelian = all(
        np.array_equal(la.matmul(a, b, p), la.matmul(b, a, p)) for a in vals for b in vals
    )
    return GroupReport(len(vals), abelian)


@dataclass
class Isomorphism:
    matrix: np.ndarray
    conjugator: Permutation

    def to_dict(self):
        return {"isomorphic": True, "matrix": self.matrix.tolist(), "conjugator": list(self.conjugator.images)}


@dataclass
class NonIsoCertificate:
    char_polys_sigma: list
    char_polys_tau: list

    def to_dict(self):
        return {"isomorphic": False, "char_polys_sigma": self.char_polys_sigma, "char_polys_tau": self.char_polys_tau}


def char_poly_multiset(sigma: Permutation, F: PrimeField) -> list:
    A = isotope(sigma, F)
    T = idempotents_formula(sigma, F)
    counts = Counter(tuple(la.char_poly(A.left_mult(v), F.p)) for v in T.vectors)
    return sorted([list(cp), c] for cp, c in counts.items())


def isotope_isomorphism(sigma: Permutation, tau: Permutation, F: PrimeField):
    """An explicit isomorphism (F^n, •_σ) → (F^n, •_τ), or a spectral certificate that none exists."""
    same_degree(sigma, tau)
    check_admissible(sigma.cycle_type(), F)
    check_admissible(tau.cycle_type(), F)
    A, B = isotope(sigma, F), isotope(tau, F)
    if are_conjugate(sigma, tau):
        g = conjugator(sigma, tau)
        for cand in (g.inverse(), g):
            M = perm_map(cand)
            if is_isomorphism(A, B, M):
                return Isomorphism(M, g)
        raise PropertyViolation("conjugator did not lift to an isomorphism", witness=list(g.images))
    ms, mt = char_poly_multiset(sigma, F), char_poly_multiset(tau, F)
    if ms == mt:
        raise PropertyViolation("non-conjugate permutations with equal spectra", witness=[ms, mt])
    return NonIsoCertificate(ms, mt)


def commuting_isotopy_check(sigma: Permutation, tau: Permutation, F: PrimeField) -> bool:
    """Is g = ψ_τ ψ_σ⁻¹ an automorphism of (F^n, •_σ)?"""
    same_degree(sigma, tau)
    g = la.matmul(perm_map(tau), la.inverse(perm_map(sigma), F.p), F.p)
    return is_automorphism(isotope(sigma, F), g)
