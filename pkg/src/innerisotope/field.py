"""Prime fields F_p and the choice of admissible primes.

Vectors and matrices elsewhere in the package are plain integer residues
(numpy int64 arrays); :class:`FieldElem` exists for scalar work and for
presenting values.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import lcm

from .errors import BoundExceeded, InadmissibleField, InvalidInput, OrderNotDividing

# keeps every n-term dot product of residues inside int64
MAX_PRIME = 1 << 26


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


@lru_cache(maxsize=None)
def factorize(m: int) -> tuple[tuple[int, int], ...]:
    """Prime factorisation of m by trial division, as ((q, e), ...)."""
    out = []
    d = 2
    while d * d <= m:
        e = 0
        while m % d == 0:
            m //= d
            e += 1
        if e:
            out.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        out.append((m, 1))
    return tuple(out)


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise InvalidInput(f"{self.p} is not prime")
        if self.p < 5:
            raise InvalidInput(f"characteristic {self.p} excluded (need p >= 5)")
        if self.p >= MAX_PRIME:
            raise InvalidInput(f"p = {self.p} too large for int64 residue arithmetic")

    def __call__(self, value: int) -> FieldElem:
        return FieldElem(value % self.p, self)

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, -1, self.p)

    def half(self) -> int:
        return self.inv(2)

    def order_of(self, a: int) -> int:
        """Multiplicative order of a nonzero residue."""
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative order")
        order = self.p - 1
        for q, _ in factorize(self.p - 1):
            while order % q == 0 and pow(a, order // q, self.p) == 1:
                order //= q
        return order

    def __str__(self):
        return f"F_{self.p}"


@dataclass(frozen=True)
class FieldElem:
    residue: int
    field: PrimeField

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise InvalidInput("elements of different fields")
            return other.residue
        return int(other) % self.field.p

    def __add__(self, other):
        return self.field(self.residue + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self.field(self.residue - self._coerce(other))

    def __rsub__(self, other):
        return self.field(self._coerce(other) - self.residue)

    def __mul__(self, other):
        return self.field(self.residue * self._coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self.field(self.residue * self.field.inv(self._coerce(other)))

    def __rtruediv__(self, other):
        return self.field(self._coerce(other) * self.field.inv(self.residue))

    def __neg__(self):
        return self.field(-self.residue)

    def __pow__(self, k: int):
        if k < 0:
            return self.field(pow(self.field.inv(self.residue), -k, self.field.p))
        return self.field(pow(self.residue, k, self.field.p))

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.field == other.field and self.residue == other.residue
        if isinstance(other, int):
            return self.residue == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.field.p))

    def __int__(self):
        return self.residue

    def inverse(self) -> FieldElem:
        return self.field(self.field.inv(self.residue))

    def order(self) -> int:
        return self.field.order_of(self.residue)

    def __repr__(self):
        return f"{self.residue} (mod {self.field.p})"


def splitting_set(parts) -> tuple[int, ...]:
    """Cycle lengths s together with 2^s - 1: the exponents z^t - 1 must split for."""
    return tuple(sorted(set(parts) | {2**s - 1 for s in parts}))


def splitting_modulus(parts) -> int:
    return lcm(*splitting_set(parts))


def admissible_prime(parts, search_cap: int = 10**7) -> PrimeField:
    """Smallest prime p >= 5 with p > n and p ≡ 1 (mod lcm S).

    ``parts`` is a cycle type (s_1, ..., s_r). The congruence makes every
    z^t - 1, t in S, split into distinct linear factors and keeps p coprime to S.
    """
    parts = tuple(parts)
    if not parts or any(s < 1 for s in parts):
        raise InvalidInput(f"bad cycle type {parts}")
    n = sum(parts)
    L = splitting_modulus(parts)
    p = L + 1
    while p < 5 or p <= n or not is_prime(p):
        p += L
        if p > search_cap:
            raise BoundExceeded(f"no admissible prime below {search_cap} for type {parts}")
    return PrimeField(p)


def check_admissible(parts, F: PrimeField) -> None:
    """Raise :class:`InadmissibleField` unless F_p suits a permutation of this type."""
    parts = tuple(parts)
    n = sum(parts)
    L = splitting_modulus(parts)
    if (F.p - 1) % L:
        raise InadmissibleField(
            f"p = {F.p} is not admissible for cycle type {parts}: p - 1 must be divisible by {L}"
        )
    if F.p <= n:
        raise InadmissibleField(f"p = {F.p} must exceed n = {n}")


def multiplicative_generator(F: PrimeField) -> FieldElem:
    """Smallest g >= 2 generating F_p^×."""
    for g in range(2, F.p):
        if F.order_of(g) == F.p - 1:
            return F(g)
    raise AssertionError("F_p^× is cyclic")  # unreachable


def primitive_root_of_order(d: int, F: PrimeField) -> FieldElem:
    """The element g^((p-1)/d) for the smallest generator g; it has order exactly d."""
    if d < 1 or (F.p - 1) % d:
        raise OrderNotDividing(f"{d} does not divide p - 1 = {F.p - 1}")
    g = multiplicative_generator(F)
    x = g ** ((F.p - 1) // d)
    if x ** d != 1 or any(x ** (d // q) == 1 for q, _ in factorize(d)):
        raise AssertionError(f"root of order {d} failed verification")  # unreachable
    return x


def cycle_roots(parts, F: PrimeField) -> dict[int, dict[str, int]]:
    """For each distinct cycle length s: eps of order s and zeta of order 2^s - 1."""
    return {
        s: {
            "eps": primitive_root_of_order(s, F).residue,
            "zeta": primitive_root_of_order(2**s - 1, F).residue,
        }
        for s in sorted(set(parts))
    }
