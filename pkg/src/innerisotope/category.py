"""The Φ/Ψ correspondence between calibrated associative and calibrated special medial algebras.

Φ(A, ◇, e, h) = (A, ∗, e) with x ∗ y = h(x ◇ y).
Ψ(A, ∗, c) = (A, ◇, c, L(c)) with x ◇ y = L(c)⁻¹(x ∗ y).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg as la
from .algebra import Algebra, check_identities, is_automorphism, perm_map, transform
from .errors import AxisNotInvertible, InvariantViolation, NotAutomorphism, PropertyViolation
from .perm import Permutation, are_conjugate, conjugator


@dataclass(eq=False)
class CalibratedAssociative:
    algebra: Algebra
    unit: np.ndarray
    auto: np.ndarray

    def __post_init__(self):
        A = self.algebra
        self.unit = A.vec(self.unit)
        self.auto = la.asmat(self.auto, A.p)
        ids = check_identities(A)
        if not (ids.commutative and ids.associative):
            raise InvariantViolation("algebra is not commutative associative", witness=ids.witnesses)
        if not np.array_equal(A.left_mult(self.unit), la.identity(A.n)):
            raise InvariantViolation("e is not a unit", witness=self.unit.tolist())
        if not is_automorphism(A, self.auto):
            raise InvariantViolation("h is not an automorphism")
        if not np.array_equal(la.matvec(self.auto, self.unit, A.p), self.unit):
            raise InvariantViolation("h does not fix the unit")

    def same_as(self, other: CalibratedAssociative) -> bool:
        return (
            self.algebra.same_as(other.algebra)
            and np.array_equal(self.unit, other.unit)
            and np.array_equal(self.auto, other.auto)
        )


@dataclass(eq=False)
class CalibratedMedial:
    algebra: Algebra
    axis: np.ndarray

    def __post_init__(self):
        A = self.algebra
        self.axis = A.vec(self.axis)
        if not A.is_idempotent(self.axis):
            raise InvariantViolation("axis is not idempotent", witness=self.axis.tolist())
        if la.det(A.left_mult(self.axis), A.p) == 0:
            raise InvariantViolation("L(axis) is singular", witness=self.axis.tolist())
        ids = check_identities(A)
        if not (ids.commutative and ids.medial):
            raise InvariantViolation("algebra is not commutative medial", witness=ids.witnesses)

    def same_as(self, other: CalibratedMedial) -> bool:
        return self.algebra.same_as(other.algebra) and np.array_equal(self.axis, other.axis)


def phi(CA: CalibratedAssociative) -> CalibratedMedial:
    A = transform(CA.algebra, CA.auto, "phi")
    out = CalibratedMedial(A, CA.unit)
    if not np.array_equal(A.left_mult(out.axis), CA.auto):
        raise InvariantViolation("L(e) differs from h after Φ")
    return out


def psi(CM: CalibratedMedial) -> CalibratedAssociative:
    A = CM.algebra
    L = A.left_mult(CM.axis)
    B = transform(A, la.inverse(L, A.p), "psi")
    return CalibratedAssociative(B, CM.axis, L)


def roundtrip_check(CA: CalibratedAssociative) -> bool:
    """Ψ(Φ(CA)) == CA, exactly."""
    return psi(phi(CA)).same_as(CA)


def medial_roundtrip_check(CM: CalibratedMedial) -> bool:
    """Φ(Ψ(CM)) == CM, exactly."""
    return phi(psi(CM)).same_as(CM)


def calibration_independence(A: Algebra, c1, c2) -> np.ndarray:
    """f = L(c1)⁻¹ L(c2): an automorphism of A carrying c1 to c2."""
    p = A.p
    for c in (c1, c2):
        if not A.is_idempotent(c):
            raise AxisNotInvertible(f"{list(c)} is not an idempotent")
        if la.det(A.left_mult(c), p) == 0:
            raise AxisNotInvertible(f"L({list(c)}) is singular")
    f = la.matmul(la.inverse(A.left_mult(c1), p), A.left_mult(c2), p)
    if not is_automorphism(A, f):
        raise PropertyViolation("L(c1)⁻¹L(c2) is not an automorphism", witness=[list(c1), list(c2)])
    if not np.array_equal(la.matvec(f, c1, p), A.vec(c2)):
        raise PropertyViolation("f(c1) != c2", witness=[list(c1), list(c2)])
    return f


def permutation_of(M) -> Permutation:
    """σ with perm_map(σ) = M, for a permutation matrix M."""
    M = np.asarray(M)
    if not (np.all((M == 0) | (M == 1)) and np.all(M.sum(axis=0) == 1) and np.all(M.sum(axis=1) == 1)):
        raise NotAutomorphism("not a permutation matrix")
    return Permutation(tuple(int(np.argmax(row)) + 1 for row in M))


def conjugacy_calibration_check(A: Algebra, h1, h2) -> bool:
    """For the product algebra: are h1 and h2 conjugate in Aut(A)?

    The answer comes from cycle types and, when positive, is confirmed by an
    explicit conjugating permutation matrix.
    """
    for h in (h1, h2):
        if not is_automorphism(A, h):
            raise NotAutomorphism("argument is not an automorphism")
    s1, s2 = permutation_of(h1), permutation_of(h2)
    if not are_conjugate(s1, s2):
        return False
    g = conjugator(s1, s2)
    p = A.p
    for cand in (g, g.inverse()):
        M = perm_map(cand)
        if np.array_equal(la.matmul(la.matmul(M, h1, p), la.inverse(M, p), p), la.asmat(h2, p)):
            return True
    raise PropertyViolation("equal cycle types but no conjugating matrix", witness=list(g.images))
