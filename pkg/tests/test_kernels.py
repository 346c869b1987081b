import os
import subprocess
import sys
from itertools import permutations

import numpy as np
import pytest

from innerisotope import _pykernels, autgroup, kernels


def random_commutative(n, p, seed):
    rng = np.random.default_rng(seed)
    sc = rng.integers(0, p, size=(n, n, n))
    sc[rng.random((n, n, n)) < 0.6] = 0
    return np.ascontiguousarray((sc + sc.transpose(1, 0, 2)) % p, dtype=np.int64)


def naive_scan(sc, p):
    n = len(sc)
    out = set()
    for c in np.ndindex(*(p,) * n):
        c = np.array(c)
        if np.array_equal(np.einsum("i,j,ijk->k", c, c, sc) % p, c):
            out.add(tuple(int(v) for v in c))
    return out


@pytest.mark.parametrize("seed", range(6))
def test_scan_matches_naive(backend, seed):
    sc = random_commutative(3, 5, seed)
    assert set(map(tuple, backend.scan_idempotents(sc, 5))) == naive_scan(sc, 5)


def test_backends_agree_on_scan(backend):
    sc = random_commutative(4, 7, 42)
    assert sorted(map(tuple, backend.scan_idempotents(sc, 7))) == sorted(
        map(tuple, _pykernels.scan_idempotents(sc, 7))
    )


@pytest.mark.parametrize("N", [3, 7])
def test_quasigroup_scan_matches_naive(backend, N):
    t = autgroup.star_table(N)
    naive = {g for g in permutations(range(N)) if autgroup.preserves(t, g)}
    assert set(map(tuple, backend.quasigroup_automorphisms(np.ascontiguousarray(t)))) == naive


def test_quasigroup_scan_on_non_quasigroup(backend):
    t = np.zeros((4, 4), dtype=np.int64)
    found = set(map(tuple, backend.quasigroup_automorphisms(t)))
    assert found == {g for g in permutations(range(4)) if g[0] == 0}


def _backend_in_subprocess(env_extra, drop=()):
    env = {k: v for k, v in {**os.environ, **env_extra}.items() if k not in drop}
    out = subprocess.run(
        [sys.executable, "-c", "from innerisotope import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    return out.stdout.strip()


def test_pure_switch_selects_python():
    assert _backend_in_subprocess({"INNERISOTOPE_PURE": "1"}) == "python"


def test_default_backend_is_reported():
    out = _backend_in_subprocess({}, drop=("INNERISOTOPE_PURE",))
    assert out in {"python", "cython"}
    assert kernels.BACKEND in {"python", "cython"}
