"""Compare the compiled kernels with the numpy/itertools fallback.

    python benchmarks/bench_kernels.py [--repeat 3] [--json]
"""
import argparse
import json
import time

from innerisotope import _pykernels
from innerisotope.algebra import isotope
from innerisotope.field import PrimeField
from innerisotope.idem import idempotents_formula, quasigroup_table, residue_table
from innerisotope.perm import Permutation

try:
    from innerisotope import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def best_of(fn, repeat):
    times = []
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def cases():
    for perm, p in (("2 3 1", 43), ("2 3 1 4", 43), ("2 1 4 3", 7)):
        sigma = Permutation.parse(perm)
        A = isotope(sigma, PrimeField(p))
        yield f"idempotent scan σ=[{perm}] p={p} ({p ** sigma.n} points)", "scan_idempotents", (A.sc, p)
    for n, p in ((2, 7), (3, 43)):
        sigma = Permutation.shift(n)
        F = PrimeField(p)
        A = isotope(sigma, F)
        T = idempotents_formula(sigma, F)
        quasigroup_table(T, A)
        N = 2**n - 1
        yield f"quasigroup automorphism scan N={N}", "quasigroup_automorphisms", (residue_table(T),)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    rows = []
    for label, name, call_args in cases():
        py_t, py_r = best_of(lambda: getattr(_pykernels, name)(*call_args), args.repeat)
        row = {"case": label, "python_s": py_t}
        if _ckernels is not None:
            c_t, c_r = best_of(lambda: getattr(_ckernels, name)(*call_args), args.repeat)
            if c_r != py_r:
                raise SystemExit(f"backends disagree on {label}")
            row.update(cython_s=c_t, speedup=py_t / c_t if c_t else float("inf"))
        rows.append(row)

    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"{'case':58} {'python':>10} {'cython':>10} {'speedup':>8}")
    for r in rows:
        c = f"{r['cython_s']:.4f}" if "cython_s" in r else "n/a"
        s = f"{r['speedup']:.1f}x" if "speedup" in r else "n/a"
        print(f"{r['case']:58} {r['python_s']:10.4f} {c:>10} {s:>8}")


if __name__ == "__main__":
    main()
