"""Finite topological spaces with subsets encoded as int bitmasks."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, List, Sequence, Tuple

__all__ = [
    "FiniteSpace", "FiniteSet", "CarrierMismatch", "CapExceeded",
    "bits_of", "points_of", "enumerate_topologies", "random_space",
    "DEFAULT_MAX_POINTS",
]

DEFAULT_MAX_POINTS = 4


class CarrierMismatch(ValueError):
    """Two point sets over different carriers were combined."""


class CapExceeded(ValueError):
    """Enumeration was asked for more points than the configured cap."""


def bits_of(points: Iterable[int]) -> int:
    b = 0
    for i in points:
        b |= 1 << i
    return b


def points_of(bits: int) -> List[int]:
    out = []
    i = 0
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class FiniteSpace:
    """A topology on ``{0, ..., n-1}``.

    `opens` is the sorted, deduplicated tuple of open sets as bitmasks.
    Construction validates the topology axioms (finite intersections and
    unions suffice here).
    """

    n: int
    opens: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be non-negative")
        full = (1 << self.n) - 1
        fam = frozenset(self.opens)
        object.__setattr__(self, "opens", tuple(sorted(fam)))
        for u in fam:
            if u < 0 or u & ~full:
                raise ValueError(f"open set {points_of(u)} is not a subset of the carrier")
        if 0 not in fam:
            raise ValueError("the empty set must be open")
        if full not in fam:
            raise ValueError("the whole carrier must be open")
        for u in fam:
            for v in fam:
                if u | v not in fam:
                    raise ValueError(f"union of {points_of(u)} and {points_of(v)} is not open")
                if u & v not in fam:
                    raise ValueError(f"intersection of {points_of(u)} and {points_of(v)} is not open")

    @classmethod
    def discrete(cls, n: int) -> FiniteSpace:
        return cls(n, tuple(range(1 << n)))

    @classmethod
    def indiscrete(cls, n: int) -> FiniteSpace:
        return cls(n, (0, (1 << n) - 1))

    @classmethod
    def from_points(cls, n: int, opens: Iterable[Iterable[int]]) -> FiniteSpace:
        return cls(n, tuple(bits_of(u) for u in opens))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def closeds(self) -> Tuple[int, ...]:
        return tuple(sorted(self.full ^ u for u in self.opens))

    @cached_property
    def interior_table(self) -> Tuple[int, ...]:
        table = []
        for s in range(1 << self.n):
            acc = 0
            for u in self.opens:
                if u & ~s == 0:
                    acc |= u
            table.append(acc)
        return tuple(table)

    @cached_property
    def closure_table(self) -> Tuple[int, ...]:
        full = self.full
        table = []
        for s in range(1 << self.n):
            acc = full
            for c in self.closeds:
                if s & ~c == 0:
                    acc &= c
            table.append(acc)
        return tuple(table)

    def interior_bits(self, s: int) -> int:
        return self.interior_table[s]

    def closure_bits(self, s: int) -> int:
        return self.closure_table[s]

    def is_open(self, s: int) -> bool:
        return s in self._open_set

    @cached_property
    def _open_set(self) -> frozenset:
        return frozenset(self.opens)

    def subset(self, points: Iterable[int]) -> FiniteSet:
        return FiniteSet(self, bits_of(points))

    def all_subsets(self) -> Iterator[FiniteSet]:
        for b in range(1 << self.n):
            yield FiniteSet(self, b)

    def __repr__(self):
        return f"FiniteSpace(n={self.n}, opens={[points_of(u) for u in self.opens]})"


@dataclass(frozen=True)
class FiniteSet:
    """A subset of a finite space's carrier."""

    space: FiniteSpace
    bits: int

    def __post_init__(self):
        if self.bits < 0 or self.bits & ~self.space.full:
            raise ValueError("bits outside the carrier")

    @property
    def points(self) -> List[int]:
        return points_of(self.bits)

    def __repr__(self):
        return "{" + ", ".join(map(str, self.points)) + "}"


def _preorder_topology(n: int, rel: Sequence[int]) -> FiniteSpace:
    # rel[i] = bitmask of points j with i <= j; opens are the up-closed sets
    opens = []
    for s in range(1 << n):
        if all(rel[i] & ~s == 0 for i in points_of(s)):
            opens.append(s)
    return FiniteSpace(n, tuple(opens))


def _transitive_closure(n: int, rel: List[int]) -> List[int]:
    rel = list(rel)
    for k in range(n):
        for i in range(n):
            if rel[i] >> k & 1:
                rel[i] |= rel[k]
    return rel


def enumerate_topologies(n: int, cap: int = DEFAULT_MAX_POINTS) -> Iterator[FiniteSpace]:
    """Yield every topology on `n` points exactly once.

    Finite topologies correspond one-to-one to preorders (specialisation
    order), so this walks the reflexive relations, keeps the transitive ones
    and yields their up-set topologies.
    """
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the enumeration cap {cap}")
    if n < 0:
        raise ValueError("n must be non-negative")
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    for mask in range(1 << len(pairs)):
        rel = [1 << i for i in range(n)]
        for k, (i, j) in enumerate(pairs):
            if mask >> k & 1:
                rel[i] |= 1 << j
        if _transitive_closure(n, rel) == rel:
            yield _preorder_topology(n, rel)


def random_space(n: int, rng: random.Random, density: float = None) -> FiniteSpace:
    """A random topology on `n` points, built from a random preorder."""
    if density is None:
        density = rng.random() * 0.6
    rel = [1 << i for i in range(n)]
    for i, j in product(range(n), repeat=2):
        if i != j and rng.random() < density:
            rel[i] |= 1 << j
    return _preorder_topology(n, _transitive_closure(n, rel))
