from itertools import product

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from innerisotope import autgroup as ag
from innerisotope import idem
from innerisotope.algebra import is_automorphism, is_isomorphism, isotope
from innerisotope.errors import CapExceeded, InvalidInput, NotClosed
from innerisotope.field import PrimeField, admissible_prime
from innerisotope.perm import Permutation, all_permutations, are_conjugate, representative


def setup(sigma):
    F = admissible_prime(sigma.cycle_type())
    return F, isotope(sigma, F), idem.idempotents_formula(sigma, F)


units7 = st.sampled_from([1, 2, 3, 4, 5, 6])


@given(units7, st.integers(0, 6), units7, st.integers(0, 6), st.integers(0, 6))
def test_affine_composition(m1, k1, m2, k2, i):
    a, b = ag.AffineMap(7, m1, k1), ag.AffineMap(7, m2, k2)
    assert (a * b)(i) == a(b(i))
    assert (a * a.inverse()).is_identity()


def test_affine_rejects_non_unit():
    with pytest.raises(InvalidInput):
        ag.AffineMap(15, 3, 0)


@pytest.mark.parametrize("n", [2, 3])
def test_affine_autos_match_bruteforce(n):
    N = 2**n - 1
    brute = ag.quasigroup_autos_bruteforce(ag.star_table(N))
    assert brute == {a.as_tuple() for a in ag.affine_autos(N)}


def test_quasigroup_order_42():
    assert len(ag.quasigroup_autos_bruteforce(ag.star_table(7))) == 42


def test_quasigroup_cap():
    with pytest.raises(CapExceeded):
        ag.quasigroup_autos_bruteforce(ag.star_table(15))


def test_exponent_of():
    assert ag.exponent_of(31) == 5
    with pytest.raises(InvalidInput):
        ag.exponent_of(10)


@pytest.mark.parametrize("n,order", [(2, 6), (3, 21), (4, 60)])
def test_single_cycle_groups(n, order):
    _, A, T = setup(Permutation.shift(n))
    autos = ag.algebra_autos(A, T)
    assert len(autos) == order
    assert all(is_automorphism(A, a.matrix) for a in autos)
    g = ag.group_structure([a.affine for a in autos])
    assert g.order == order and not g.abelian and g.relations_ok
    assert g.isomorphism_type == f"Z_{2**n - 1} ⋊ Z_{n}"


@pytest.mark.parametrize(
    "part,order",
    [((1, 1, 1), 6), ((2, 1), 6), ((3,), 21), ((2, 2), 72), ((2, 1, 1), 12), ((3, 1), 21), ((1, 1, 1, 1), 24), ((4,), 60)],
    ids=str,
)
def test_lifting_orders(part, order):
    F, A, T = setup(representative(part))
    autos = ag.automorphisms_by_lifting(A, T)
    assert len(autos) == order
    assert ag.matrix_group_structure([a.matrix for a in autos], F.p).order == order


@pytest.mark.parametrize("imgs,p,order", [("1 2", 5, 2), ("2 1", 7, 6)])
def test_lifting_matches_gl2_scan(imgs, p, order):
    sigma = Permutation.parse(imgs)
    F = PrimeField(p)
    A = isotope(sigma, F)
    scan = [
        M for M in (np.array(v).reshape(2, 2) for v in product(range(p), repeat=4))
        if is_automorphism(A, M)
    ]
    lifted = ag.automorphisms_by_lifting(A, idem.idempotents_formula(sigma, F))
    assert len(scan) == len(lifted) == order
    assert {M.tobytes() for M in scan} == {np.asarray(a.matrix, dtype=np.int64).tobytes() for a in lifted}


def test_group_structure_not_closed():
    with pytest.raises(NotClosed):
        ag.group_structure([ag.AffineMap(7, 2, 0)])


@pytest.mark.parametrize("sigma", list(all_permutations(3)), ids=str)
def test_isomorphism_classification_s3(sigma):
    F = PrimeField(43)
    for tau in all_permutations(3):
        res = ag.isotope_isomorphism(sigma, tau, F)
        if are_conjugate(sigma, tau):
            assert isinstance(res, ag.Isomorphism)
            assert is_isomorphism(isotope(sigma, F), isotope(tau, F), res.matrix)
        else:
            assert isinstance(res, ag.NonIsoCertificate)
            assert res.char_polys_sigma != res.char_polys_tau


@pytest.mark.parametrize("sigma", list(all_permutations(3)), ids=str)
def test_commuting_isotopy(sigma):
    F = PrimeField(43)
    for tau in all_permutations(3):
        assert ag.commuting_isotopy_check(sigma, tau, F) == (sigma * tau == tau * sigma)
