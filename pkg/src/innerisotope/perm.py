"""Permutations of {1..n} in one-line (image list) notation.

Composition follows ``(p * q)(i) == p(q(i))`` everywhere in the package.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import DegreeMismatch, InvalidInput, NotConjugate


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; ``images[i-1]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        n = len(images)
        if n == 0:
            raise InvalidInput("permutation degree must be positive")
        if sorted(images) != list(range(1, n + 1)):
            raise InvalidInput(f"{list(images)} is not a permutation of 1..{n}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def shift(cls, n: int) -> Permutation:
        """The single cycle i -> i+1 (mod n), image list [2, 3, ..., n, 1]."""
        return cls(tuple(range(2, n + 1)) + (1,))

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Parse a whitespace or comma separated image list such as ``"2 3 1"``."""
        tokens = [t for t in re.split(r"[\s,]+", text.strip().strip("[]")) if t]
        try:
            return cls(tuple(int(t) for t in tokens))
        except ValueError as exc:
            if isinstance(exc, InvalidInput):
                raise
            raise InvalidInput(f"cannot parse permutation {text!r}") from exc

    @classmethod
    def from_cycles(cls, text: str, n: int | None = None) -> Permutation:
        """Parse disjoint cycle notation, e.g. ``"(1 2 3)(4 5)"``.

        Indices not mentioned are fixed points. The degree defaults to the
        largest index mentioned.
        """
        groups = re.findall(r"\(([^()]*)\)", text)
        rest = re.sub(r"\(([^()]*)\)", "", text).strip()
        if rest or not groups:
            raise InvalidInput(f"cannot parse cycle notation {text!r}")
        try:
            cycles = [[int(t) for t in re.split(r"[\s,]+", g.strip()) if t] for g in groups]
        except ValueError as exc:
            raise InvalidInput(f"cannot parse cycle notation {text!r}") from exc
        seen = [i for c in cycles for i in c]
        if len(seen) != len(set(seen)) or any(i < 1 for i in seen):
            raise InvalidInput(f"cycles in {text!r} are not disjoint positive indices")
        degree = max(seen, default=1) if n is None else n
        if seen and max(seen) > degree:
            raise InvalidInput(f"index {max(seen)} exceeds degree {degree}")
        images = list(range(1, degree + 1))
        for c in cycles:
            for a, b in zip(c, c[1:] + c[:1]):
                images[a - 1] = b
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def cycles(self) -> list[list[int]]:
        return cycle_decomposition(self)

    def cycle_type(self) -> tuple[int, ...]:
        return cycle_type(self)

    def order(self) -> int:
        from math import lcm

        return lcm(*self.cycle_type())

    def cycle_string(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())

    def __str__(self) -> str:
        return " ".join(map(str, self.images))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return p∘q, i.e. the map i -> p(q(i))."""
    if p.n != q.n:
        raise DegreeMismatch(f"degrees differ: {p.n} vs {q.n}")
    return Permutation(tuple(p(q(i)) for i in range(1, p.n + 1)))


def cycle_decomposition(p: Permutation) -> list[list[int]]:
    """Disjoint cycles, each listed as i, p(i), p(p(i)), ... from its smallest element.

    Fixed points are kept as 1-cycles; cycles are sorted by smallest element.
    """
    seen = set()
    cycles = []
    for start in range(1, p.n + 1):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        j = p(start)
        while j != start:
            cycle.append(j)
            seen.add(j)
            j = p(j)
        cycles.append(cycle)
    return cycles


def cycle_type(p: Permutation) -> tuple[int, ...]:
    return tuple(sorted((len(c) for c in cycle_decomposition(p)), reverse=True))


def are_conjugate(p: Permutation, q: Permutation) -> bool:
    if p.n != q.n:
        raise DegreeMismatch(f"degrees differ: {p.n} vs {q.n}")
    return cycle_type(p) == cycle_type(q)


def conjugator(p: Permutation, q: Permutation) -> Permutation:
    """Return g with g∘p∘g⁻¹ = q.

    Cycles of both permutations are aligned after sorting by (length, smallest
    element) and g maps the k-th entry of each p-cycle to the k-th entry of
    the matching q-cycle.
    """
    if not are_conjugate(p, q):
        raise NotConjugate(f"{p} and {q} have different cycle types")
    key = lambda c: (len(c), c[0])  # noqa: E731
    images = [0] * p.n
    for cp, cq in zip(sorted(p.cycles(), key=key), sorted(q.cycles(), key=key)):
        for a, b in zip(cp, cq):
            images[a - 1] = b
    g = Permutation(tuple(images))
    if g * p * g.inverse() != q:
        raise AssertionError("conjugator failed to verify")  # unreachable
    return g


def partitions(n: int, largest: int | None = None):
    """Yield the integer partitions of n as non-increasing tuples."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def representative(parts) -> Permutation:
    """The permutation whose cycles are consecutive blocks of the given lengths."""
    images = []
    start = 1
    for s in parts:
        images.extend(range(start + 1, start + s))
        images.append(start)
        start += s
    return Permutation(tuple(images))


def all_permutations(n: int):
    from itertools import permutations

    for images in permutations(range(1, n + 1)):
        yield Permutation(images)
