import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from innerisotope import linalg as la
from innerisotope.errors import FieldTooSmall, NotInvertible

P = 43


def matrices(n_max=5, p=P):
    return st.integers(1, n_max).flatmap(
        lambda n: st.lists(st.lists(st.integers(0, p - 1), min_size=n, max_size=n), min_size=n, max_size=n)
    )


def sympy_charpoly(M, p):
    lam = sympy.Symbol("lam")
    coeffs = sympy.Matrix(M).charpoly(lam).all_coeffs()[::-1]
    return [int(c) % p for c in coeffs]


@given(matrices())
def test_det_matches_sympy(M):
    assert la.det(M, P) == int(sympy.Matrix(M).det()) % P


@given(matrices())
@settings(max_examples=60)
def test_char_poly_matches_sympy(M):
    assert la.char_poly(M, P) == sympy_charpoly(M, P)


@given(matrices())
def test_inverse(M):
    if la.det(M, P) == 0:
        with pytest.raises(NotInvertible):
            la.inverse(M, P)
    else:
        assert np.array_equal(la.matmul(M, la.inverse(M, P), P), la.identity(len(M)))


@given(matrices())
def test_rank_nullity(M):
    null = la.nullspace(M, P)
    assert la.rank(M, P) + len(null) == len(M)
    for v in null:
        assert not np.any(la.matvec(M, v, P))


def test_char_poly_needs_large_field():
    with pytest.raises(FieldTooSmall):
        la.char_poly(np.eye(5, dtype=np.int64), 5)


def test_interpolate_and_roots():
    c = la.poly_mul([1, 1], [3, 1], 7)  # (x + 1)(x + 3)
    assert la.interpolate([0, 1, 2], [la.poly_eval(c, x, 7) for x in range(3)], 7) == c
    assert la.poly_roots(c, 7) == [4, 6]


def test_matpow():
    M = np.array([[1, 1], [0, 1]])
    assert np.array_equal(la.matpow(M, 10, P), [[1, 10], [0, 1]])
    assert np.array_equal(la.matpow(M, 0, P), la.identity(2))


def test_in_span():
    assert la.in_span([[1, 0, 0], [0, 1, 0]], [3, 4, 0], P)
    assert not la.in_span([[1, 0, 0]], [0, 1, 0], P)
    assert la.in_span([], [0, 0], P)
