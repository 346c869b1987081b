"""Rerunnable checks: a per-permutation invariant suite and the fixed acceptance set."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from math import lcm

import numpy as np

from . import autgroup as ag
from . import category as cat
from . import idem
from . import linalg as la
from . import spectral as sp
from .algebra import (
    check_identities,
    decompose_by_cycles,
    isotope,
    perm_map,
    poly_model,
    product_algebra,
)
from .errors import CapExceeded, InvalidInput, IsotopeError, PropertyViolation
from .field import PrimeField, admissible_prime, cycle_roots
from .intpoly import cyclotomic, is_regular, lambda_poly, lambda_substituted, quotient_by_z_z1, resultant
from .perm import Permutation, all_permutations, partitions, representative

MAX_N = 5
LIFT_CAP = 200_000  # basis assignments tried by the general automorphism search


@dataclass
class CheckResult:
    name: str
    passed: bool
    witness: object = None
    detail: object = None

    def to_dict(self):
        d = {"name": self.name, "pass": bool(self.passed)}
        if self.witness is not None:
            d["witness"] = self.witness
        if self.detail is not None:
            d["detail"] = self.detail
        return d


def _run(name, fn) -> CheckResult:
    """Turn a check body into a result; property violations become failures with witnesses."""
    try:
        out = fn()
    except PropertyViolation as exc:
        return CheckResult(name, False, exc.witness, str(exc))
    if isinstance(out, CheckResult):
        return out
    if isinstance(out, tuple):
        passed, detail = out
        return CheckResult(name, passed, None if passed else detail, detail if passed else None)
    return CheckResult(name, bool(out))


# ---------------------------------------------------------------- per-σ suite

def sigma_checks(sigma: Permutation, F: PrimeField | None = None, cap: int = idem.DEFAULT_CAP) -> list[CheckResult]:
    F = F or admissible_prime(sigma.cycle_type())
    n, p = sigma.n, F.p
    A = isotope(sigma, F)
    T = idem.idempotents_formula(sigma, F)
    single = len(T.cycle_lengths) == 1
    N = 2**n - 1
    results = []

    def oracles():
        chain = idem.idempotents_chain_blocks(sigma, F)
        detail = {"chain": chain == T.vector_set()}
        if p**n <= cap:
            detail["brute_force"] = idem.idempotents_bruteforce(A, cap) == T.vector_set()
        else:
            detail["brute_force"] = "cap exceeded"
        ok = detail["chain"] and detail["brute_force"] in (True, "cap exceeded")
        return ok, detail

    results.append(_run("idempotents.count", lambda: (len(T) == 2**n, {"count": len(T)})))
    results.append(_run("idempotents.oracles", oracles))
    results.append(_run("idempotents.regular", lambda: all(idem.is_regular_idempotent(A, v) for v in T.vectors)))
    results.append(_run("idempotents.generic", lambda: idem.genericity_check(A, T.vectors)))
    results.append(_run("idempotents.span", lambda: (sp.span_rank(T) == n, {"rank": sp.span_rank(T)})))

    def magma():
        q = idem.quasigroup_table(T, A)
        ok = q.closed and q.idempotent and q.commutative and q.medial
        if single:
            ok = ok and q.latin and q.law_ok
        return ok, q.witnesses or None

    results.append(_run("quasigroup.laws", magma))

    def strata():
        rows = sp.strata_check(A, T)
        bad = [r["alpha"] for r in rows if not (r["matches"] and r["isospectral"])]
        return not bad, bad or None

    results.append(_run("spectra.strata", strata))
    results.append(_run("spectra.semisimple", lambda: all(sp.peirce(A, v) is not None for v in T.vectors)))

    def fusion():
        if single:
            eps = cycle_roots([n], F)[n]["eps"]
            tables = [sp.check_cyclic_law(sp.fusion_table(A, e.vector), eps, p, n) for e in T.nonzero()]
        elif sigma.is_identity():
            tables = [sp.check_peirce_law(sp.fusion_table(A, v)) for v in T.vectors]
        else:
            return True, {"law": None}
        bad = [w for t in tables if not t.law_ok for w in t.witnesses]
        return not bad, bad[:3] or None

    results.append(_run("spectra.fusion", fusion))

    def orders():
        bad = []
        for e in T.entries:
            if all(e.code):
                expect = lcm(*T.cycle_lengths)
                got = sp.operator_order_check(A, e.vector)
                if got != expect:
                    bad.append([e.label, got, expect])
        return not bad, bad or None

    results.append(_run("spectra.operator_order", orders))

    if single:
        def power_sums():
            bad = [s for s in range(1, n) if np.any(sp.power_sum_check(A, T, s))]
            full = sp.power_sum_check(A, T, n)
            return not bad and np.array_equal(full, N * la.identity(n) % p), bad or None

        results.append(_run("spectra.power_sums", power_sums))

        def power_identity():
            ones = np.ones(n, dtype=np.int64)
            bad = [e.label for e in T.nonzero() if not np.array_equal(idem.power(A, e.vector, N), ones)]
            return not bad, bad or None

        results.append(_run("idempotents.power_identity", power_identity))

    ids = check_identities(A)
    results.append(_run("identities.medial", lambda: (ids.commutative and ids.medial, ids.witnesses or None)))

    def roundtrip():
        CA = cat.CalibratedAssociative(product_algebra(n, F), np.ones(n, dtype=np.int64), perm_map(sigma))
        CM = cat.phi(CA)
        ok = cat.roundtrip_check(CA) and cat.medial_roundtrip_check(CM) and CM.algebra.same_as(A)
        return ok

    results.append(_run("category.roundtrip", roundtrip))

    def automorphisms():
        general = None
        if ag.candidate_count(A, T) <= LIFT_CAP:
            general = ag.automorphisms_by_lifting(A, T)
        if single:
            autos = ag.algebra_autos(A, T)
            g = ag.group_structure([a.affine for a in autos])
            detail = {"order": g.order, "abelian": g.abelian, "relations_ok": g.relations_ok}
            ok = g.order == n * N and g.relations_ok
            if general is not None:
                detail["exhaustive_order"] = len(general)
                ok = ok and len(general) == len(autos)
            if math.factorial(N) <= ag.DEFAULT_QUASIGROUP_CAP:
                q = ag.quasigroup_autos_bruteforce(idem.residue_table(T))
                detail["quasigroup_order"] = len(q)
                ok = ok and q == {a.as_tuple() for a in ag.affine_autos(N)}
            ones = np.ones(n, dtype=np.int64)
            fixes = all((a.affine.k == 0) == np.array_equal(la.matvec(a.matrix, ones, p), ones) for a in autos)
            detail["fixes_ones_iff_k0"] = fixes
            return ok and fixes, detail
        if general is None:
            return True, {"order": "cap exceeded"}
        g = ag.matrix_group_structure([a.matrix for a in general], p)
        detail = {"order": g.order, "abelian": g.abelian}
        if sigma.is_identity():
            return g.order == math.factorial(n), detail
        return True, detail

    results.append(_run("automorphisms", automorphisms))
    return results


def verify_all(n_max: int, cap: int = idem.DEFAULT_CAP, acceptance: bool = True) -> tuple[int, list[dict]]:
    """Run the suite for one σ per cycle type for each 2 <= n <= n_max.

    Returns (exit status, per-permutation records).
    """
    if not 1 <= n_max <= MAX_N:
        raise InvalidInput(f"n_max must lie in 1..{MAX_N}")
    records = []
    status = 0
    for n in range(1, n_max + 1):
        for parts in partitions(n):
            sigma = representative(parts)
            F = admissible_prime(parts)
            try:
                res = sigma_checks(sigma, F, cap)
            except CapExceeded as exc:
                records.append({"sigma": list(sigma.images), "error": str(exc)})
                status = max(status, 3)
                continue
            ok = all(r.passed for r in res)
            status = status if ok else max(status, 1)
            records.append({
                "sigma": list(sigma.images),
                "cycle_type": list(parts),
                "prime": F.p,
                "checks": [r.to_dict() for r in res],
            })
    if acceptance:
        for r in run_acceptance():
            if not r.passed:
                status = max(status, 1)
            records.append({"acceptance": r.to_dict()})
    return status, records


# ---------------------------------------------------------------- acceptance set

def _shift_setup(n: int, p: int | None = None):
    sigma = Permutation.shift(n)
    F = PrimeField(p) if p else admissible_prime([n])
    A = isotope(sigma, F)
    return sigma, F, A, idem.idempotents_formula(sigma, F)


def acceptance_1():
    sigma, F, A, T = _shift_setup(3, 43)
    brute = idem.idempotents_bruteforce(A)
    chain = idem.idempotents_chain(sigma, F)
    ok = (
        len(T) == 8
        and T.vector_set() == brute == chain
        and all(idem.is_regular_idempotent(A, v) for v in T.vectors)
        and idem.genericity_check(A, brute)
    )
    return ok, {"count": len(brute)}


def acceptance_2():
    sigma, F, A, T = _shift_setup(3, 43)
    polys = {e.label: la.char_poly(A.left_mult(e.vector), 43) for e in T.entries}
    ok = polys.pop("0") == [0, 0, 0, 1] and all(cp == [42, 0, 0, 1] for cp in polys.values())
    return ok, None if ok else polys


def acceptance_3():
    sigma, F, A, T = _shift_setup(3, 43)
    q = idem.quasigroup_table(T, A)
    bad = [
        [i, j] for i in range(1, 8) for j in range(1, 8)
        if q.table[T.index(str(i))][T.index(str(j))] != str((4 * (i + j)) % 7 or 7)
    ]
    ok = not bad and q.latin and q.idempotent and q.commutative and q.medial
    return ok, bad or q.witnesses or None


def acceptance_4():
    sigma, F, A, T = _shift_setup(3, 43)
    eps = cycle_roots([3], F)[3]["eps"]
    tables = [sp.check_cyclic_law(sp.fusion_table(A, e.vector), eps, 43, 3) for e in T.nonzero()]
    return all(t.law_ok for t in tables) and len(tables) == 7, None


def acceptance_5():
    sigma, F, A, T = _shift_setup(3, 43)
    zero = not np.any(sp.power_sum_check(A, T, 1)) and not np.any(sp.power_sum_check(A, T, 2))
    seven = np.array_equal(sp.power_sum_check(A, T, 3), 7 * la.identity(3))
    orders = [sp.operator_order_check(A, e.vector) for e in T.nonzero()]
    ok = zero and seven and sp.span_rank(T) == 3 and orders == [3] * 7
    return ok, {"orders": orders, "span_rank": sp.span_rank(T)}


def acceptance_6():
    sigma, F, A, T = _shift_setup(3, 43)
    idem.quasigroup_table(T, A)
    brute = ag.quasigroup_autos_bruteforce(idem.residue_table(T))
    affine = {a.as_tuple() for a in ag.affine_autos(7)}
    return brute == affine and len(brute) == 42, {"found": len(brute)}


def acceptance_7():
    detail = {}
    ok = True
    for n, expect in ((3, 21), (2, 6)):
        sigma, F, A, T = _shift_setup(n)
        g = ag.group_structure([a.affine for a in ag.algebra_autos(A, T)])
        detail[f"shift{n}"] = g.to_dict()
        ok = ok and g.order == expect and not g.abelian and g.relations_ok
    ident = Permutation.identity(3)
    F = admissible_prime([1, 1, 1])
    autos = ag.automorphisms_by_lifting(isotope(ident, F), idem.idempotents_formula(ident, F))
    detail["identity3"] = len(autos)
    return ok and len(autos) == 6, detail


def acceptance_8():
    regular = all(is_regular(n).status for n in (2, 3, 4))
    res = {}
    for n, qs in ((3, (3, 5, 6)), (4, (7, 11, 13, 14))):
        lam, phi = lambda_poly(n), cyclotomic(2**n - 1)
        for q in qs:
            res[f"{n}:{q}"] = resultant(quotient_by_z_z1(lambda_substituted(n, q) - lam), phi)
    ok = regular and all(v == (49 if k.startswith("3:") else 50625) for k, v in res.items())
    return ok, res


EXPECTED_IDENTITY_TABLE = [[i & j for j in range(8)] for i in range(8)]


def acceptance_9():
    sigma = Permutation.identity(3)
    F = admissible_prime([1, 1, 1])
    A = isotope(sigma, F)
    T = idem.idempotents_formula(sigma, F)
    q = idem.quasigroup_table(T, A)
    table = [[int(q.table[T.index(str(i))][T.index(str(j))]) for j in range(8)] for i in range(8)]
    cps_ok = True
    for e in T.entries:
        # (λ - 1)^w λ^(3 - w), w = number of ones in the code
        w = sum(e.code)
        expect = [1]
        for _ in range(w):
            expect = la.poly_mul(expect, [F.p - 1, 1], F.p)
        expect = [0] * (3 - w) + expect
        cps_ok = cps_ok and la.char_poly(A.left_mult(e.vector), F.p) == expect
    return table == EXPECTED_IDENTITY_TABLE and cps_ok, {"c3*c5": table[3][5], "c6*c5": table[6][5]}


def acceptance_10():
    sigma = Permutation.parse("2 1 3")
    F = PrimeField(7)
    dec = decompose_by_cycles(sigma, F)
    block = dec.blocks[0]
    z = cycle_roots([2], F)[2]["zeta"]
    c1, c2 = idem.block_idempotent(2, 1, z, 7), idem.block_idempotent(2, 2, z, 7)
    cross = np.array_equal(block.mul(c1, c2), (-np.array(c1) - np.array(c2)) % 7)
    T = idem.idempotents_formula(sigma, F)
    autos = ag.automorphisms_by_lifting(isotope(sigma, F), T)
    ok = dec.cycles == [[1, 2], [3]] and cross and len(T) == 8 and len(autos) == 6
    return ok, {"cycles": dec.cycles, "idempotents": len(T), "automorphisms": len(autos)}


def acceptance_11():
    cases = list(all_permutations(3)) + [representative(q) for q in partitions(4)]
    bad = []
    for sigma in cases:
        F = admissible_prime(sigma.cycle_type())
        n = sigma.n
        CA = cat.CalibratedAssociative(product_algebra(n, F), np.ones(n, dtype=np.int64), perm_map(sigma))
        back = cat.psi(cat.phi(CA))
        ids = check_identities(back.algebra)
        if not (back.same_as(CA) and ids.associative and ids.unital):
            bad.append(list(sigma.images))
    sigma, F, A, T = _shift_setup(3, 43)
    axes = [e.vector for e in T.nonzero()]
    pairs = sum(1 for a in axes for b in axes if cat.calibration_independence(A, a, b) is not None)
    return not bad and pairs == 49, bad or {"axis_pairs": pairs}


def acceptance_12():
    detail = {}
    ok = True
    for text in ("2 1 4 3", "2 3 1 4"):
        sigma = Permutation.parse(text)
        F = admissible_prime(sigma.cycle_type())
        A = isotope(sigma, F)
        T = idem.idempotents_formula(sigma, F)
        strata = sp.strata_check(A, T)
        chain = idem.idempotents_chain_blocks(sigma, F)
        dec = decompose_by_cycles(sigma, F)
        tables = [idem.idempotents_formula(Permutation.shift(len(c)), F) for c in dec.cycles]
        total = tables[0]
        for t in tables[1:]:
            total = idem.direct_sum_idempotents(total, t)
        rinv = la.inverse(dec.relabel, F.p)
        pulled = {tuple(int(x) for x in la.matvec(rinv, v, F.p)) for v in total.vectors}
        case_ok = (
            len(T) == 16
            and all(r["matches"] for r in strata)
            and all(idem.is_regular_idempotent(A, v) for v in T.vectors)
            and idem.genericity_check(A, T.vectors)
            and T.vector_set() == chain == pulled
        )
        detail[text] = {"prime": F.p, "count": len(T), "ok": case_ok}
        ok = ok and case_ok
    return ok, detail


def acceptance_13():
    F = PrimeField(43)
    bad = []
    perms = list(all_permutations(3))
    for s in perms:
        for t in perms:
            r = ag.isotope_isomorphism(s, t, F)
            iso = isinstance(r, ag.Isomorphism)
            if iso != (s.cycle_type() == t.cycle_type()):
                bad.append(["iso", list(s.images), list(t.images)])
            if ag.commuting_isotopy_check(s, t, F) != (s * t == t * s):
                bad.append(["commute", list(s.images), list(t.images)])
    return not bad, bad or None


def acceptance_14(samples: int = 100, seed: int = 0):
    F = PrimeField(43)
    pm = poly_model(3, F)
    B = pm.isotope()
    rng = random.Random(seed)
    bad = []
    for _ in range(samples):
        x = [rng.randrange(43) for _ in range(3)]
        y = [rng.randrange(43) for _ in range(3)]
        d = sp.circulant_delta(x, F)
        lhs = B.mul(x, B.mul(x, B.mul(x, y)))
        if not np.array_equal(lhs, np.array(y) * d % 43):
            bad.append(["cubic", x, y])
        if sp.circulant_delta(B.mul(x, y), F) != d * sp.circulant_delta(y, F) % 43:
            bad.append(["multiplicative", x, y])
    return not bad, bad[:3] or {"samples": samples}


def acceptance_15():
    bad = []
    for n in range(1, 5):
        for sigma in all_permutations(n):
            F = admissible_prime(sigma.cycle_type())
            if not check_identities(isotope(sigma, F)).medial:
                bad.append(list(sigma.images))
    ids = check_identities(isotope(Permutation.shift(3), PrimeField(43)))
    witness = ids.witnesses.get("associative")
    return not bad and not ids.associative and witness is not None, {"associativity_witness": witness}


ACCEPTANCE = {f"acceptance-{i}": globals()[f"acceptance_{i}"] for i in range(1, 16)}


def run_acceptance(names=None) -> list[CheckResult]:
    names = names or list(ACCEPTANCE)
    out = []
    for name in names:
        if name not in ACCEPTANCE:
            raise InvalidInput(f"unknown check {name!r}")
        try:
            out.append(_run(name, ACCEPTANCE[name]))
        except IsotopeError as exc:
            out.append(CheckResult(name, False, None, str(exc)))
    return out
