"""Idempotents of isotopes (K^n, •_σ) and the magma they induce.

For a cycle (a_1 a_2 ... a_s) of σ the block idempotents are 0 and

    c_k = (ζ^(2^(s-1) k), ..., ζ^(2k), ζ^k)   placed on a_1, ..., a_s,

with ζ of order 2^s - 1 and k = 1..2^s - 1 (k = 2^s - 1 is the all-ones
vector). Idempotents of the whole algebra are sums over cycles.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from . import kernels
from . import linalg as la
from .algebra import Algebra
from .errors import CapExceeded, InvalidInput, NotClosed, NotIdempotent
from .field import PrimeField, check_admissible, cycle_roots
from .perm import Permutation, cycle_decomposition

DEFAULT_CAP = 20_000_000


@dataclass(frozen=True)
class Idempotent:
    label: str
    vector: tuple[int, ...]
    code: tuple[int, ...]
    residues: tuple[int, ...]  # 0 marks an inactive cycle


def make_label(cycle_lengths, code, residues) -> str:
    """Stable labels: "0" for zero, k for one cycle, the binary code for σ = id."""
    if not any(code):
        return "0"
    if len(cycle_lengths) == 1:
        return str(residues[0])
    if all(s == 1 for s in cycle_lengths):
        return str(int("".join(map(str, code)), 2))
    return ".".join(str(k) for k in residues)


@dataclass
class IdempotentTable:
    field: PrimeField
    cycle_lengths: tuple[int, ...]
    entries: list[Idempotent]
    product_table: list[list[int]] | None = None

    @property
    def vectors(self) -> list[tuple[int, ...]]:
        return [e.vector for e in self.entries]

    @property
    def labels(self) -> list[str]:
        return [e.label for e in self.entries]

    def vector_set(self) -> set[tuple[int, ...]]:
        return set(self.vectors)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def by_label(self, label: str) -> Idempotent:
        return self.entries[self.index(label)]

    def nonzero(self) -> list[Idempotent]:
        return [e for e in self.entries if any(e.code)]

    def __len__(self):
        return len(self.entries)

    def to_dict(self):
        d = {
            "p": self.field.p,
            "cycle_lengths": list(self.cycle_lengths),
            "idempotents": [
                {"label": e.label, "vector": list(e.vector), "code": list(e.code),
                 "residues": list(e.residues)}
                for e in self.entries
            ],
        }
        if self.product_table is not None:
            labels = self.labels
            d["product_table"] = [[labels[t] for t in row] for row in self.product_table]
        return d


def _sorted_table(F, lengths, raw) -> IdempotentTable:
    raw.sort(key=lambda item: (item[1], item[2]))
    entries = [Idempotent(make_label(lengths, code, res), vec, code, res) for vec, code, res in raw]
    return IdempotentTable(F, tuple(lengths), entries)


def block_idempotent(s: int, k: int, zeta: int, p: int) -> list[int]:
    """c_k of the single s-cycle isotope, k in 1..2^s - 1."""
    return [pow(zeta, (2 ** (s - 1 - t)) * k, p) for t in range(s)]


def idempotents_formula(sigma: Permutation, F: PrimeField) -> IdempotentTable:
    check_admissible(sigma.cycle_type(), F)
    cycles = cycle_decomposition(sigma)
    lengths = [len(c) for c in cycles]
    roots = cycle_roots(lengths, F)
    per_cycle = []
    for c in cycles:
        s = len(c)
        options = [(0, 0, None)]
        for k in range(1, 2**s):
            options.append((1, k, block_idempotent(s, k, roots[s]["zeta"], F.p)))
        per_cycle.append(options)
    raw = []
    for choice in product(*per_cycle):
        vec = [0] * sigma.n
        for c, (_, _, block) in zip(cycles, choice):
            if block is not None:
                for pos, value in zip(c, block):
                    vec[pos - 1] = value
        raw.append((tuple(vec), tuple(a for a, _, _ in choice), tuple(k for _, k, _ in choice)))
    return _sorted_table(F, lengths, raw)


def idempotents_bruteforce(A: Algebra, cap: int = DEFAULT_CAP) -> set[tuple[int, ...]]:
    """Exhaustive scan of F_p^n for c * c = c."""
    if A.p**A.n > cap:
        raise CapExceeded(f"p^n = {A.p ** A.n} exceeds the brute-force cap {cap}")
    return set(kernels.scan_idempotents(A.sc, A.p))


def chain_solutions(s: int, p: int) -> list[list[int]]:
    """Solutions of x_t = x_{t+1}^2 (indices mod s) on one cycle, by back-propagation.

    The last coordinate is free; squaring walks back around the cycle and the
    wraparound condition x_s = x_1^2 filters candidates.
    """
    out = []
    for free in range(p):
        x = [0] * s
        x[s - 1] = free
        for t in range(s - 2, -1, -1):
            x[t] = x[t + 1] * x[t + 1] % p
        if x[0] * x[0] % p == x[s - 1]:
            out.append(x)
    return out


def idempotents_chain(sigma: Permutation, F: PrimeField) -> set[tuple[int, ...]]:
    """Structured oracle for one cycle: only p candidates are examined."""
    cycles = cycle_decomposition(sigma)
    if len(cycles) != 1:
        raise InvalidInput("the chain oracle needs a single cycle; use idempotents_chain_blocks")
    return idempotents_chain_blocks(sigma, F)


def idempotents_chain_blocks(sigma: Permutation, F: PrimeField) -> set[tuple[int, ...]]:
    """Chain oracle per cycle, combined over cycles by direct sum."""
    cycles = cycle_decomposition(sigma)
    per_cycle = [chain_solutions(len(c), F.p) for c in cycles]
    result = set()
    for choice in product(*per_cycle):
        vec = [0] * sigma.n
        for c, block in zip(cycles, choice):
            for pos, value in zip(c, block):
                vec[pos - 1] = value
        result.add(tuple(vec))
    return result


def direct_sum_idempotents(TA: IdempotentTable, TB: IdempotentTable) -> IdempotentTable:
    """Idempotents of A ⊕ B in block coordinates: every c_A + c_B."""
    if TA.field != TB.field:
        raise InvalidInput("tables over different fields")
    lengths = TA.cycle_lengths + TB.cycle_lengths
    raw = [
        (a.vector + b.vector, a.code + b.code, a.residues + b.residues)
        for a in TA.entries
        for b in TB.entries
    ]
    return _sorted_table(TA.field, lengths, raw)


def is_regular_idempotent(A: Algebra, c) -> bool:
    """det(L(c) - I/2) != 0."""
    if not A.is_idempotent(c):
        raise NotIdempotent(f"{list(c)} is not idempotent")
    M = (A.left_mult(c) - A.field.half() * la.identity(A.n)) % A.p
    return la.det(M, A.p) != 0


def genericity_check(A: Algebra, idempotents=None, cap: int = DEFAULT_CAP) -> bool:
    """True iff A has exactly 2^n distinct regular idempotents (zero included)."""
    if idempotents is None:
        idempotents = idempotents_bruteforce(A, cap)
    distinct = {tuple(int(v) for v in c) for c in idempotents}
    return sum(is_regular_idempotent(A, c) for c in distinct) == 2**A.n


@dataclass
class QuasigroupReport:
    labels: list[str]
    table: list[list[str]]
    closed: bool
    nonzero_closed: bool
    latin: bool
    idempotent: bool
    commutative: bool
    medial: bool
    law_ok: bool | None
    witnesses: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "labels": self.labels,
            "table": self.table,
            "closed": self.closed,
            "nonzero_closed": self.nonzero_closed,
            "latin": self.latin,
            "idempotent": self.idempotent,
            "commutative": self.commutative,
            "medial": self.medial,
            "law_ok": self.law_ok,
            "witnesses": self.witnesses,
        }


def fill_product_table(T: IdempotentTable, A: Algebra) -> list[list[int]]:
    lookup = {v: i for i, v in enumerate(T.vectors)}
    size = len(T)
    table = [[0] * size for _ in range(size)]
    for i, j in product(range(size), repeat=2):
        if j < i:
            table[i][j] = table[j][i]
            continue
        prod = tuple(int(v) for v in A.mul(T.vectors[i], T.vectors[j]))
        if prod not in lookup:
            raise NotClosed(
                f"{T.labels[i]} * {T.labels[j]} is not a listed idempotent",
                witness={"pair": [T.labels[i], T.labels[j]], "product": list(prod)},
            )
        table[i][j] = lookup[prod]
    T.product_table = table
    return table


def star(i: int, j: int, n: int) -> int:
    """i ⊛ j = 2^(n-1) (i + j) mod 2^n - 1, with representative 2^n - 1 for 0."""
    N = 2**n - 1
    return (2 ** (n - 1) * (i + j)) % N or N


def quasigroup_table(T: IdempotentTable, A: Algebra) -> QuasigroupReport:
    """Fill the product table from A and check the quasigroup/magma laws on it."""
    table = fill_product_table(T, A)
    labels = T.labels
    size = len(T)
    nz = [i for i, e in enumerate(T.entries) if any(e.code)]
    nzset = set(nz)
    witnesses = {}

    idem = all(table[i][i] == i for i in range(size))
    comm = all(table[i][j] == table[j][i] for i in range(size) for j in range(size))
    medial = True
    for i, j, k, l in product(range(size), repeat=4):
        if table[table[i][j]][table[k][l]] != table[table[i][k]][table[j][l]]:
            medial = False
            witnesses["medial"] = [labels[x] for x in (i, j, k, l)]
            break
    nonzero_closed = all(table[i][j] in nzset for i in nz for j in nz)
    latin = nonzero_closed and all(
        sorted(table[i][j] for j in nz) == nz and sorted(table[j][i] for j in nz) == nz for i in nz
    )
    if not nonzero_closed:
        bad = next((i, j) for i in nz for j in nz if table[i][j] not in nzset)
        witnesses["nonzero_closed"] = [labels[bad[0]], labels[bad[1]]]

    law_ok = None
    if len(T.cycle_lengths) == 1:
        n = T.cycle_lengths[0]
        law_ok = True
        for i in nz:
            for j in nz:
                expect = str(star(int(labels[i]), int(labels[j]), n))
                if labels[table[i][j]] != expect:
                    law_ok = False
                    witnesses["law"] = [labels[i], labels[j], labels[table[i][j]], expect]
                    break
            if not law_ok:
                break
    return QuasigroupReport(
        labels, [[labels[t] for t in row] for row in table], True, nonzero_closed, latin,
        idem, comm, medial, law_ok, witnesses,
    )


def residue_table(T: IdempotentTable) -> np.ndarray:
    """Product table of a single-cycle isotope on residues 0..N-1 (label N is residue 0)."""
    if len(T.cycle_lengths) != 1 or T.product_table is None:
        raise InvalidInput("residue table needs a filled single-cycle table")
    N = 2 ** T.cycle_lengths[0] - 1
    labels = T.labels
    out = np.zeros((N, N), dtype=np.int64)
    for i, e in enumerate(T.entries):
        for j, f in enumerate(T.entries):
            if any(e.code) and any(f.code):
                out[int(labels[i]) % N, int(labels[j]) % N] = int(labels[T.product_table[i][j]]) % N
    return out


def power(A: Algebra, c, m: int):
    """The m-fold product c * (c * (... * c)) computed with the product-algebra power.

    For an isotope this is the plain coordinate-wise power c^m, i.e. the power
    in the base algebra, which is what the identity c^(2^d - 1) = e concerns.
    """
    return np.array([pow(int(v), m, A.p) for v in c], dtype=np.int64)
