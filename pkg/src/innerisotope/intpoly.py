"""Integer polynomial arithmetic behind the regularity certificates.

An integer n >= 2 is *regular* when Φ_N (N = 2^n - 1) divides
Λ_n(z^m) - Λ_n(z), Λ_n(z) = z + z^2 + z^4 + ... + z^(2^(n-1)), only for m in
the subgroup Δ_n = <2> of the units mod N.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

import numpy as np

from .errors import BoundExceeded, InvalidInput, NonMonicDivisor, ZeroPolynomial
from .field import factorize, is_prime


class IntPoly:
    """Polynomial with arbitrary-precision integer coefficients, constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, k: int, a: int = 1) -> IntPoly:
        return cls([0] * k + [a])

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> IntPoly:
        if not terms:
            return cls()
        c = [0] * (max(terms) + 1)
        for k, a in terms.items():
            c[k] += a
        return cls(c)

    @property
    def degree(self) -> float | int:
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.lc == 1

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, _lift(other).coeffs
        n = max(len(a), len(b))
        return IntPoly([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return IntPoly([-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        a, b = self.coeffs, _lift(other).coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = IntPoly([1])
        for _ in range(k):
            result = result * self
        return result

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def substitute_power(self, m: int) -> IntPoly:
        """f(z^m)."""
        return IntPoly.from_terms({k * m: a for k, a in enumerate(self.coeffs) if a})

    def content(self) -> int:
        g = 0
        for a in self.coeffs:
            g = gcd(g, a)
        return g

    def __repr__(self):
        if not self.coeffs:
            return "IntPoly(0)"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[k]
            if a:
                terms.append(f"{a}" if k == 0 else f"{a}*z^{k}")
        return "IntPoly(" + " + ".join(terms) + ")"


def _lift(x) -> IntPoly:
    return x if isinstance(x, IntPoly) else IntPoly([x])


def divrem_monic(f: IntPoly, g: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Exact division with remainder by a monic polynomial: f = q g + r, deg r < deg g."""
    if g.is_zero() or not g.is_monic():
        raise NonMonicDivisor(f"divisor {g} is not monic")
    dg = len(g.coeffs) - 1
    r = list(f.coeffs)
    if len(r) <= dg:
        return IntPoly(), IntPoly(r)
    q = [0] * (len(r) - dg)
    gc = g.coeffs
    for k in range(len(r) - 1, dg - 1, -1):
        a = r[k]
        if a:
            q[k - dg] = a
            for j in range(dg + 1):
                if gc[j]:
                    r[k - dg + j] -= a * gc[j]
    return IntPoly(q), IntPoly(r[:dg])


def pseudo_remainder(f: IntPoly, g: IntPoly) -> IntPoly:
    """lc(g)^(deg f - deg g + 1) f mod g, computed without fractions."""
    dg = len(g.coeffs) - 1
    r = list(f.coeffs)
    lc = g.lc
    delta = len(r) - 1 - dg
    if delta < 0:
        return IntPoly(r)
    for k in range(len(r) - 1, dg - 1, -1):
        a = r[k]
        r = [lc * x for x in r]
        if a:
            for j in range(dg + 1):
                r[k - dg + j] -= a * g.coeffs[j]
    # each of the delta + 1 steps scaled by lc exactly once
    return IntPoly(r[:dg])


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Res(f, g) by the subresultant remainder sequence (Sylvester sign convention)."""
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("resultant of the zero polynomial is undefined here")
    A, B = f, g
    da, db = A.degree, B.degree
    if da == 0 and db == 0:
        return 1
    ca, cb = A.content(), B.content()
    A = IntPoly([x // ca for x in A.coeffs])
    B = IntPoly([x // cb for x in B.coeffs])
    t = ca**db * cb**da
    s = 1
    if da < db:
        A, B = B, A
        if da % 2 and db % 2:
            s = -1
    g_, h = 1, 1
    while B.degree > 0:
        delta = A.degree - B.degree
        if A.degree % 2 and B.degree % 2:
            s = -s
        R = pseudo_remainder(A, B)
        A = B
        if R.is_zero():
            return 0
        denom = g_ * h**delta
        B = IntPoly([x // denom for x in R.coeffs])
        g_ = A.lc
        if delta == 0:
            pass
        elif delta == 1:
            h = g_
        else:
            h = g_**delta // h ** (delta - 1)
    # B is a nonzero constant here
    dA = A.degree
    h = B.lc**dA // h ** (dA - 1) if dA >= 1 else h
    return s * t * h


def sylvester_matrix(f: IntPoly, g: IntPoly) -> list[list[int]]:
    m, n = int(f.degree), int(g.degree)
    fa = list(reversed(f.coeffs))
    ga = list(reversed(g.coeffs))
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + fa + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + ga + [0] * (size - n - 1 - i))
    return rows


def _binomial_mul(c: np.ndarray, d: int) -> np.ndarray:
    """c * (z^d - 1)."""
    out = np.zeros(len(c) + d, dtype=np.int64)
    out[d:] += c
    out[: len(c)] -= c
    return out


def _binomial_div(c: np.ndarray, d: int) -> np.ndarray:
    """Exact quotient c / (z^d - 1): q_j = c_{j+d} + c_{j+2d} + ...."""
    L = len(c) - d
    shifted = np.zeros(-(-L // d) * d, dtype=np.int64)
    shifted[:L] = c[d:]
    blocks = shifted.reshape(-1, d)
    q = np.flip(np.cumsum(np.flip(blocks, axis=0), axis=0), axis=0).reshape(-1)[:L]
    if np.any(c[:d] + q[:d]):
        raise AssertionError("binomial division not exact")  # unreachable
    return q


def _mobius(m: int) -> int:
    fac = factorize(m)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def divisors(N: int) -> list[int]:
    return [d for d in range(1, N + 1) if N % d == 0]


def _binomial_product(exponents: dict[int, int]) -> IntPoly:
    """∏ (z^d - 1)^e_d for integer e_d whose product is a polynomial."""
    c = np.array([1], dtype=np.int64)
    for d, e in exponents.items():
        for _ in range(max(e, 0)):
            c = _binomial_mul(c, d)
    for d, e in exponents.items():
        for _ in range(max(-e, 0)):
            c = _binomial_div(c, d)
    return IntPoly(c.tolist())


@lru_cache(maxsize=64)
def cyclotomic(N: int) -> IntPoly:
    """Φ_N.

    Small N use repeated exact division of z^N - 1 by Φ_d, d | N, d < N.
    Large N use the Möbius product of binomials (z^d - 1)^μ(N/d), which is
    the same identity solved for Φ_N but linear in N.
    """
    if N < 1:
        raise InvalidInput("cyclotomic index must be positive")
    if N <= 512:
        f = IntPoly.monomial(N) - 1
        for d in divisors(N)[:-1]:
            f, r = divrem_monic(f, cyclotomic(d))
            if not r.is_zero():
                raise AssertionError("cyclotomic division not exact")  # unreachable
        return f
    return _binomial_product({d: _mobius(N // d) for d in divisors(N)})


@lru_cache(maxsize=16)
def cyclotomic_cofactor(N: int) -> IntPoly:
    """(z^N - 1) / Φ_N, the product of Φ_d over proper divisors d."""
    return _binomial_product({d: -_mobius(N // d) for d in divisors(N) if d < N})


def lambda_poly(n: int) -> IntPoly:
    """Λ_n(z) = z + z^2 + z^4 + ... + z^(2^(n-1))."""
    if n < 2:
        raise InvalidInput("Λ_n needs n >= 2")
    return IntPoly.from_terms({2**i: 1 for i in range(n)})


def lambda_substituted(n: int, m: int) -> IntPoly:
    """Λ_n(z^m) with each exponent m 2^i reduced mod 2^n - 1 into 1..2^n - 1."""
    N = 2**n - 1
    terms: dict[int, int] = {}
    for i in range(n):
        e = (m * 2**i) % N or N
        terms[e] = terms.get(e, 0) + 1
    return IntPoly.from_terms(terms)


def divides_cyclotomic(f: IntPoly, N: int) -> tuple[bool, str]:
    """Decide Φ_N | f exactly for f with exponents at most N.

    Returns (divides, method). For N <= 255 the remainder against Φ_N is
    computed directly. Above that, f is first evaluated at a primitive N-th
    root of unity in some F_q with q ≡ 1 (mod N): a nonzero value proves
    non-divisibility. A zero value is confirmed by checking that
    (z^N - 1) / Φ_N · f vanishes modulo z^N - 1, which is equivalent to
    Φ_N | f over Z.
    """
    if f.is_zero():
        return True, "zero"
    if N <= 255:
        _, r = divrem_monic(f, cyclotomic(N))
        return r.is_zero(), "remainder"
    q, root = _prime_with_root(N)
    if sum(a * pow(root, k, q) for k, a in enumerate(f.coeffs) if a) % q:
        return False, f"evaluation mod {q}"
    cof = np.zeros(N, dtype=np.int64)
    cc = cyclotomic_cofactor(N).coeffs
    cof[: len(cc)] = cc
    acc = np.zeros(N, dtype=np.int64)
    for k, a in enumerate(f.coeffs):
        if a:
            acc += a * np.roll(cof, k)
    return not acc.any(), "cyclic convolution"


@lru_cache(maxsize=None)
def _prime_with_root(N: int) -> tuple[int, int]:
    q = N + 1
    while not is_prime(q):
        q += N
    # an element of order exactly N
    for g in range(2, q):
        x = pow(g, (q - 1) // N, q)
        if all(pow(x, N // r, q) != 1 for r, _ in factorize(N)):
            return q, x
    raise AssertionError("no root found")  # unreachable


@dataclass
class DivisibilityRecord:
    m: int
    in_delta: bool
    divides: bool
    method: str
    resultant: int | None = None

    def to_dict(self):
        d = {"m": self.m, "in_delta": self.in_delta, "divides": self.divides, "method": self.method}
        if self.resultant is not None:
            d["resultant"] = self.resultant
        return d


@dataclass
class RegularityCertificate:
    n: int
    status: bool
    delta_set: list[int]
    tested_m: list[DivisibilityRecord] = field(default_factory=list)

    @property
    def witnesses(self) -> list[DivisibilityRecord]:
        """Units outside Δ_n for which Φ_N does divide; empty iff regular."""
        return [r for r in self.tested_m if r.divides and not r.in_delta]

    @property
    def fixed_point_ok(self) -> bool:
        return all(r.divides for r in self.tested_m if r.in_delta)

    def to_dict(self):
        return {
            "n": self.n,
            "status": self.status,
            "delta_set": self.delta_set,
            "fixed_point_ok": self.fixed_point_ok,
            "tested_m": [r.to_dict() for r in self.tested_m],
        }


def quotient_by_z_z1(f: IntPoly) -> IntPoly:
    """f / (z (z - 1)); both z = 0 and z = 1 are roots of Λ_n(z^m) - Λ_n(z)."""
    q, r = divrem_monic(f, IntPoly([0, -1, 1]))
    if not r.is_zero():
        raise InvalidInput("polynomial not divisible by z(z-1)")
    return q


def is_regular(n: int, bound: int = 16, resultants: bool = False) -> RegularityCertificate:
    """Certify whether n is regular.

    Every unit m mod 2^n - 1 is tested, including m in Δ_n where divisibility
    must hold. With ``resultants`` the resultant of
    (Λ_n(z^m) - Λ_n(z)) / (z(z-1)) and Φ_N is recorded for m outside Δ_n.
    """
    if n < 2:
        raise InvalidInput("regularity is defined for n >= 2")
    if n > bound:
        raise BoundExceeded(f"n = {n} exceeds the configured bound {bound}")
    N = 2**n - 1
    delta = sorted({pow(2, i, N) for i in range(n)})
    lam = lambda_poly(n)
    phi = cyclotomic(N) if resultants else None
    records = []
    for m in range(1, N):
        if gcd(m, N) != 1:
            continue
        f = lambda_substituted(n, m) - lam
        div, method = divides_cyclotomic(f, N)
        rec = DivisibilityRecord(m, m in delta, div, method)
        if resultants and m not in delta:
            rec.resultant = resultant(quotient_by_z_z1(f), phi)
        records.append(rec)
    status = all(r.divides == r.in_delta for r in records)
    return RegularityCertificate(n, status, delta, records)
