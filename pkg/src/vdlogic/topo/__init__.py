"""Topological carriers: finite spaces, the real line, and closure operators.

Point sets are either :class:`FiniteSet` (bitmask over a :class:`FiniteSpace`)
or :class:`IntervalSet` (over the real line). The functions below dispatch on
that type and refuse to mix carriers.
"""

from .finite import (
    DEFAULT_MAX_POINTS, CapExceeded, CarrierMismatch, FiniteSet, FiniteSpace,
    bits_of, enumerate_topologies, points_of, random_space,
)
from .intervals import REAL_LINE, Interval, IntervalSet, RealLine, random_interval_set
from .kuratowski import (
    InvalidKuratowskiLike, KuratowskiLike, check_kuratowski, extend_kuratowski,
    kuratowski_violation, random_kuratowski_like, space_from_closure,
)

__all__ = [
    "FiniteSpace", "FiniteSet", "IntervalSet", "Interval", "RealLine", "REAL_LINE",
    "CarrierMismatch", "CapExceeded", "DEFAULT_MAX_POINTS",
    "bits_of", "points_of", "enumerate_topologies", "random_space", "random_interval_set",
    "complement", "union", "intersection", "closure", "interior", "issubset",
    "is_full", "full_set", "empty_set", "carrier_of",
    "KuratowskiLike", "InvalidKuratowskiLike", "check_kuratowski",
    "kuratowski_violation", "extend_kuratowski", "space_from_closure",
    "random_kuratowski_like",
]


def carrier_of(s):
    if isinstance(s, FiniteSet):
        return s.space
    if isinstance(s, IntervalSet):
        return REAL_LINE
    raise TypeError(f"not a point set: {s!r}")


def _same(s, t):
    if isinstance(s, FiniteSet) and isinstance(t, FiniteSet):
        if s.space != t.space:
            raise CarrierMismatch("point sets live in different finite spaces")
        return True
    if isinstance(s, IntervalSet) and isinstance(t, IntervalSet):
        return False
    raise CarrierMismatch(f"cannot combine {type(s).__name__} with {type(t).__name__}")


def full_set(space):
    if isinstance(space, FiniteSpace):
        return FiniteSet(space, space.full)
    if isinstance(space, RealLine):
        return IntervalSet.full()
    raise TypeError(f"not a space: {space!r}")


def empty_set(space):
    if isinstance(space, FiniteSpace):
        return FiniteSet(space, 0)
    if isinstance(space, RealLine):
        return IntervalSet.empty()
    raise TypeError(f"not a space: {space!r}")


def complement(s):
    if isinstance(s, FiniteSet):
        return FiniteSet(s.space, s.space.full ^ s.bits)
    return s.complement()


def union(s, t):
    if _same(s, t):
        return FiniteSet(s.space, s.bits | t.bits)
    return s.union(t)


def intersection(s, t):
    if _same(s, t):
        return FiniteSet(s.space, s.bits & t.bits)
    return s.intersection(t)


def issubset(s, t) -> bool:
    if _same(s, t):
        return s.bits & ~t.bits == 0
    return s.issubset(t)


def closure(s):
    if isinstance(s, FiniteSet):
        return FiniteSet(s.space, s.space.closure_bits(s.bits))
    return s.closure()


def interior(s):
    if isinstance(s, FiniteSet):
        return FiniteSet(s.space, s.space.interior_bits(s.bits))
    return s.interior()


def is_full(s) -> bool:
    if isinstance(s, FiniteSet):
        return s.bits == s.space.full
    return s.is_full()
