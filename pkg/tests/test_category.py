import numpy as np
import pytest

from innerisotope import category as cat
from innerisotope import idem
from innerisotope.algebra import check_identities, is_automorphism, isotope, perm_map, product_algebra
from innerisotope.errors import AxisNotInvertible, InvariantViolation, NotAutomorphism
from innerisotope.field import PrimeField, admissible_prime
from innerisotope.perm import Permutation, all_permutations, are_conjugate

F = PrimeField(61)  # the product-algebra side needs no roots of unity


def calibrated(sigma, field=F):
    n = sigma.n
    return cat.CalibratedAssociative(product_algebra(n, field), np.ones(n, dtype=np.int64), perm_map(sigma))


@pytest.mark.parametrize("sigma", list(all_permutations(4)), ids=str)
def test_roundtrip_s4(sigma):
    CA = calibrated(sigma)
    CM = cat.phi(CA)
    assert CM.algebra.same_as(isotope(sigma, F))
    assert cat.roundtrip_check(CA)
    assert cat.medial_roundtrip_check(CM)
    back = cat.psi(CM)
    ids = check_identities(back.algebra)
    assert ids.associative and ids.unital


def test_medial_side_with_other_axes():
    sigma = Permutation.shift(3)
    Fp = admissible_prime([3])
    A = isotope(sigma, Fp)
    T = idem.idempotents_formula(sigma, Fp)
    for e in T.nonzero():
        CM = cat.CalibratedMedial(A, e.vector)
        assert cat.medial_roundtrip_check(CM)


def test_calibration_independence():
    sigma = Permutation.shift(3)
    Fp = admissible_prime([3])
    A = isotope(sigma, Fp)
    vecs = [e.vector for e in idem.idempotents_formula(sigma, Fp).nonzero()]
    for c1 in vecs:
        for c2 in vecs:
            f = cat.calibration_independence(A, c1, c2)
            assert is_automorphism(A, f)
            assert A.vec(f @ np.array(c1) % 43).tolist() == list(c2)


def test_calibration_rejects_zero_axis():
    A = isotope(Permutation.shift(3), PrimeField(43))
    with pytest.raises(AxisNotInvertible):
        cat.calibration_independence(A, [0, 0, 0], [1, 1, 1])
    with pytest.raises(AxisNotInvertible):
        cat.calibration_independence(A, [2, 0, 0], [1, 1, 1])


def test_invariants():
    A = product_algebra(3, PrimeField(7))
    with pytest.raises(InvariantViolation):
        cat.CalibratedAssociative(A, [1, 1, 0], np.eye(3, dtype=np.int64))
    with pytest.raises(InvariantViolation):
        cat.CalibratedAssociative(A, [1, 1, 1], [[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    with pytest.raises(InvariantViolation):
        cat.CalibratedAssociative(isotope(Permutation.shift(3), PrimeField(43)), [1, 1, 1], np.eye(3))
    with pytest.raises(InvariantViolation):
        cat.CalibratedMedial(A, [1, 0, 0])
    with pytest.raises(InvariantViolation):
        cat.CalibratedMedial(A, [2, 1, 1])


def test_permutation_of():
    for sigma in all_permutations(3):
        assert cat.permutation_of(perm_map(sigma)) == sigma
    with pytest.raises(NotAutomorphism):
        cat.permutation_of([[1, 1], [0, 1]])


def test_conjugacy_calibration():
    A = product_algebra(3, PrimeField(7))
    for s in all_permutations(3):
        for t in all_permutations(3):
            assert cat.conjugacy_calibration_check(A, perm_map(s), perm_map(t)) == are_conjugate(s, t)
