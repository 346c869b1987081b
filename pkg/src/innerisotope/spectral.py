"""Peirce eigenspaces of idempotents and the fusion rules between them."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from . import linalg as la
from .algebra import Algebra, isotope
from .errors import FormulaMismatch, InvalidInput, NonSemisimple, NotFinite, NotIdempotent, NotInvertible
from .field import PrimeField, cycle_roots
from .idem import IdempotentTable, block_idempotent
from .perm import Permutation


@dataclass
class PeirceDecomposition:
    idempotent: tuple[int, ...]
    char_poly: list[int]
    eigenvalues: list[int]
    eigenspaces: dict[int, list[np.ndarray]]

    def dims(self) -> dict[int, int]:
        return {lam: len(b) for lam, b in self.eigenspaces.items()}

    def to_dict(self):
        return {
            "idempotent": list(self.idempotent),
            "char_poly": self.char_poly,
            "eigenvalues": self.eigenvalues,
            "dims": {str(k): v for k, v in self.dims().items()},
        }


def peirce(A: Algebra, c) -> PeirceDecomposition:
    if not A.is_idempotent(c):
        raise NotIdempotent(f"{list(c)} is not idempotent")
    p, n = A.p, A.n
    L = A.left_mult(c)
    cp = la.char_poly(L, p)
    eigenvalues = la.poly_roots(cp, p)
    spaces = {lam: la.nullspace((L - lam * la.identity(n)) % p, p) for lam in eigenvalues}
    vectors = [v for b in spaces.values() for v in b]
    if len(vectors) != n or (n and la.rank(np.array(vectors), p) != n):
        raise NonSemisimple(
            f"eigenspaces of L(c) span dimension {len(vectors)} < {n}",
            witness={"idempotent": [int(v) for v in c], "dims": {str(k): len(b) for k, b in spaces.items()}},
        )
    for lam, basis in spaces.items():
        for v in basis:
            assert np.array_equal(la.matvec(L, v, p), lam * v % p)
    return PeirceDecomposition(tuple(int(v) for v in A.vec(c)), cp, eigenvalues, spaces)


def eigvec_formula(k: int, p_exp: int, n: int, F: PrimeField) -> np.ndarray:
    """η_{k,p} for the single n-cycle isotope, checked against L(c_k) η = ε^p η.

    Component i (1-based) is ε^((i-1)p) · ζ^(-(2^(n-i) + ... + 2^(n-2)) k);
    the sum is empty for i = 1.
    """
    p = F.p
    roots = cycle_roots([n], F)[n]
    eps, zeta = roots["eps"], roots["zeta"]
    N = 2**n - 1
    eta = np.array(
        [
            pow(eps, i * p_exp, p) * pow(zeta, (-sum(2**t for t in range(n - 1 - i, n - 1)) * k) % N, p) % p
            for i in range(n)
        ],
        dtype=np.int64,
    )
    A = isotope(Permutation.shift(n), F)
    c = block_idempotent(n, k % N or N, zeta, p)
    lam = pow(eps, p_exp, p)
    got = la.matvec(A.left_mult(c), eta, p)
    if not np.array_equal(got, lam * eta % p):
        raise FormulaMismatch(
            f"η_{{{k},{p_exp}}} is not an eigenvector for ε^{p_exp}",
            witness={"eta": eta.tolist(), "L_eta": got.tolist()},
        )
    return eta


@dataclass
class FusionEntry:
    contained_in: list[int]
    span_dim: int
    equals: int | None  # the eigenvalue ν with A_λ * A_μ = A_ν, when that holds


@dataclass
class FusionTable:
    eigenvalues: list[int]
    entries: dict[tuple[int, int], FusionEntry]
    law: str | None = None
    law_ok: bool | None = None
    witnesses: list = field(default_factory=list)

    def to_dict(self):
        return {
            "eigenvalues": self.eigenvalues,
            "law": self.law,
            "law_ok": self.law_ok,
            "entries": [
                {"pair": [a, b], "contained_in": e.contained_in, "span_dim": e.span_dim, "equals": e.equals}
                for (a, b), e in sorted(self.entries.items())
            ],
            "witnesses": self.witnesses,
        }


def fusion_table(A: Algebra, c, decomposition: PeirceDecomposition | None = None) -> FusionTable:
    """Record, for each eigenvalue pair, which eigenspaces the products A_λ * A_μ touch."""
    pd = decomposition or peirce(A, c)
    p = A.p
    lams = pd.eigenvalues
    cols = [v for lam in lams for v in pd.eigenspaces[lam]]
    owner = [lam for lam in lams for _ in pd.eigenspaces[lam]]
    P_inv = la.inverse(np.array(cols).T, p)  # eigen-coordinates of a vector
    entries = {}
    for a, b in product(lams, repeat=2):
        prods = [A.mul(x, y) for x in pd.eigenspaces[a] for y in pd.eigenspaces[b]]
        prods = [v for v in prods if np.any(v)]
        dim = la.rank(np.array(prods), p) if prods else 0
        touched = set()
        for v in prods:
            coords = la.matvec(P_inv, v, p)
            touched.update(owner[i] for i in np.nonzero(coords)[0])
        contained = sorted(touched)
        equals = None
        if len(contained) == 1 and dim == len(pd.eigenspaces[contained[0]]):
            equals = contained[0]
        entries[(a, b)] = FusionEntry(contained, dim, equals)
    return FusionTable(lams, entries)


def check_cyclic_law(table: FusionTable, eps: int, p: int, n: int) -> FusionTable:
    """A_{ε^a} * A_{ε^b} = A_{ε^(a+b)} with equality of spans."""
    log = {pow(eps, a, p): a for a in range(n)}
    ok = set(table.eigenvalues) == set(log)
    for (x, y), entry in table.entries.items():
        target = pow(eps, (log.get(x, 0) + log.get(y, 0)) % n, p)
        if entry.equals != target:
            ok = False
            table.witnesses.append({"pair": [x, y], "expected": target, "got": entry.contained_in})
    table.law, table.law_ok = "cyclic", ok
    return table


def check_peirce_law(table: FusionTable) -> FusionTable:
    """Eigenvalues in {0, 1} with A_1A_1 ⊆ A_1, A_0A_0 ⊆ A_0, A_0A_1 = 0."""
    allowed = {(1, 1): {1}, (0, 0): {0}, (0, 1): set(), (1, 0): set()}
    ok = set(table.eigenvalues) <= {0, 1}
    for pair, entry in table.entries.items():
        if not set(entry.contained_in) <= allowed.get(pair, set()):
            ok = False
            table.witnesses.append({"pair": list(pair), "got": entry.contained_in})
    table.law, table.law_ok = "peirce", ok
    return table


def power_sum_check(A: Algebra, T: IdempotentTable, s: int) -> np.ndarray:
    """Σ L(c)^s over the nonzero idempotents of T."""
    total = np.zeros((A.n, A.n), dtype=np.int64)
    for e in T.nonzero():
        total = (total + la.matpow(A.left_mult(e.vector), s, A.p)) % A.p
    return total


def span_rank(T: IdempotentTable) -> int:
    vectors = [v for v in T.vectors if any(v)]
    return la.rank(np.array(vectors), T.field.p) if vectors else 0


def operator_order_check(A: Algebra, c) -> int:
    """Smallest m >= 1 with L(c)^m = I.

    Invertible n×n matrices over F_p have order below p^n, which bounds the loop.
    """
    if not A.is_idempotent(c):
        raise NotIdempotent(f"{list(c)} is not idempotent")
    L = A.left_mult(c)
    if la.det(L, A.p) == 0:
        raise NotInvertible("L(c) is singular")
    I = la.identity(A.n)
    M = L.copy()
    for m in range(1, A.p**A.n):
        if np.array_equal(M, I):
            return m
        M = la.matmul(M, L, A.p)
    raise NotFinite("no finite order found below p^n", witness={"idempotent": [int(v) for v in c]})


def expected_char_poly(cycle_lengths, code, p: int) -> list[int]:
    """∏ (λ^s_i - α_i), constant term first, residues mod p."""
    out = [1]
    for s, a in zip(cycle_lengths, code):
        factor = [(-a) % p] + [0] * (s - 1) + [1]
        out = la.poly_mul(out, factor, p)
    return out + [0] * (sum(cycle_lengths) + 1 - len(out))


def strata_check(A: Algebra, T: IdempotentTable) -> list[dict]:
    """Per binary code α: the characteristic polynomials found and the one expected."""
    strata: dict[tuple, dict] = {}
    for e in T.entries:
        cp = la.char_poly(A.left_mult(e.vector), A.p)
        rec = strata.setdefault(e.code, {"alpha": list(e.code), "labels": [], "char_polys": set()})
        rec["labels"].append(e.label)
        rec["char_polys"].add(tuple(cp))
    out = []
    for code in sorted(strata):
        rec = strata[code]
        expected = expected_char_poly(T.cycle_lengths, code, A.p)
        found = sorted(rec["char_polys"])
        out.append({
            "alpha": rec["alpha"],
            "labels": rec["labels"],
            "char_poly": expected,
            "char_poly_text": la.format_poly(expected, p=A.p),
            "isospectral": len(found) == 1,
            "matches": found == [tuple(expected)],
        })
    return out


def circulant_delta(a, F: PrimeField) -> int:
    """det of the circulant [[a0, a2, a1], [a1, a0, a2], [a2, a1, a0]]."""
    a = [int(v) % F.p for v in a]
    if len(a) != 3:
        raise InvalidInput("the circulant norm is defined for n = 3 only")
    a0, a1, a2 = a
    return la.det([[a0, a2, a1], [a1, a0, a2], [a2, a1, a0]], F.p)
