"""Exact finite unions of intervals of the real line.

Endpoints are :class:`fractions.Fraction` or ``±math.inf``; every result is
kept in canonical form so that set equality is plain tuple equality.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple, Union

__all__ = ["Interval", "IntervalSet", "RealLine", "REAL_LINE", "random_interval_set"]

Endpoint = Union[Fraction, float]
INF = math.inf


def _endpoint(x) -> Endpoint:
    if isinstance(x, float) and math.isinf(x):
        return x
    if isinstance(x, str):
        t = x.strip().lower()
        if t in ("inf", "+inf"):
            return INF
        if t == "-inf":
            return -INF
    return Fraction(x)


@dataclass(frozen=True, order=True)
class Interval:
    """A non-empty interval; infinite ends are always open."""

    lo: Endpoint
    hi: Endpoint
    lo_open: bool = False
    hi_open: bool = False

    def __post_init__(self):
        object.__setattr__(self, "lo", _endpoint(self.lo))
        object.__setattr__(self, "hi", _endpoint(self.hi))
        if self.lo == -INF:
            object.__setattr__(self, "lo_open", True)
        if self.hi == INF:
            object.__setattr__(self, "hi_open", True)
        if self.lo == INF or self.hi == -INF:
            raise ValueError("interval bounds out of order")
        if not (self.lo < self.hi or (self.lo == self.hi and not self.lo_open and not self.hi_open)):
            raise ValueError(f"empty interval {self}")

    def contains(self, x) -> bool:
        above = self.lo < x or (x == self.lo and not self.lo_open)
        below = x < self.hi or (x == self.hi and not self.hi_open)
        return above and below

    def __str__(self):
        lo = "-inf" if self.lo == -INF else str(self.lo)
        hi = "+inf" if self.hi == INF else str(self.hi)
        if self.lo == self.hi:
            return "{" + lo + "}"
        return f"{'(' if self.lo_open else '['}{lo}, {hi}{')' if self.hi_open else ']'}"


def _nonempty(lo, hi, lo_open, hi_open) -> bool:
    return lo < hi or (lo == hi and not lo_open and not hi_open)


def _canon(parts: Iterable[Interval]) -> Tuple[Interval, ...]:
    # sort by left end, closed ends first at equal positions
    items = sorted(parts, key=lambda iv: (iv.lo, iv.lo_open))
    out = []
    for iv in items:
        if out:
            cur = out[-1]
            overlaps = iv.lo < cur.hi or (
                iv.lo == cur.hi and not (cur.hi_open and iv.lo_open)
            )
            if overlaps:
                # pick the larger right end; closed beats open at a tie
                if (iv.hi, not iv.hi_open) > (cur.hi, not cur.hi_open):
                    out[-1] = Interval(cur.lo, iv.hi, cur.lo_open, iv.hi_open)
                continue
        out.append(iv)
    return tuple(out)


class IntervalSet:
    """A subset of R given as a finite union of intervals, in canonical form:
    sorted, pairwise disjoint, and no two pieces touching."""

    __slots__ = ("parts", "_hash")

    def __init__(self, parts: Iterable[Interval] = ()):
        self.parts = _canon(parts)
        self._hash = hash(self.parts)

    @classmethod
    def _raw(cls, parts: Tuple[Interval, ...]) -> IntervalSet:
        obj = cls.__new__(cls)
        obj.parts = parts
        obj._hash = hash(parts)
        return obj

    @classmethod
    def closed(cls, lo, hi) -> IntervalSet:
        return cls([Interval(lo, hi)])

    @classmethod
    def open(cls, lo, hi) -> IntervalSet:
        return cls([Interval(lo, hi, True, True)])

    @classmethod
    def closed_open(cls, lo, hi) -> IntervalSet:
        return cls([Interval(lo, hi, False, True)])

    @classmethod
    def open_closed(cls, lo, hi) -> IntervalSet:
        return cls([Interval(lo, hi, True, False)])

    @classmethod
    def point(cls, x) -> IntervalSet:
        return cls([Interval(x, x)])

    @classmethod
    def empty(cls) -> IntervalSet:
        return cls._raw(())

    @classmethod
    def full(cls) -> IntervalSet:
        return cls._raw((Interval(-INF, INF, True, True),))

    def __eq__(self, other):
        return isinstance(other, IntervalSet) and self.parts == other.parts

    def __hash__(self):
        return self._hash

    def __bool__(self):
        return bool(self.parts)

    def __contains__(self, x) -> bool:
        return any(iv.contains(x) for iv in self.parts)

    def __repr__(self):
        return f"IntervalSet({self})"

    def __str__(self):
        if not self.parts:
            return "{}"
        return " ∪ ".join(str(iv) for iv in self.parts)

    def is_full(self) -> bool:
        return self.parts == IntervalSet.full().parts

    # -- Boolean algebra ---------------------------------------------------

    def complement(self) -> IntervalSet:
        out = []
        lo, lo_open = -INF, True
        for iv in self.parts:
            hi, hi_open = iv.lo, not iv.lo_open
            if _nonempty(lo, hi, lo_open, hi_open):
                out.append(Interval(lo, hi, lo_open, hi_open))
            lo, lo_open = iv.hi, not iv.hi_open
        if _nonempty(lo, INF, lo_open, True):
            out.append(Interval(lo, INF, lo_open, True))
        return IntervalSet._raw(tuple(out))

    def union(self, other: IntervalSet) -> IntervalSet:
        return IntervalSet(self.parts + other.parts)

    def intersection(self, other: IntervalSet) -> IntervalSet:
        return self.complement().union(other.complement()).complement()

    def difference(self, other: IntervalSet) -> IntervalSet:
        return self.intersection(other.complement())

    def issubset(self, other: IntervalSet) -> bool:
        return not self.difference(other)

    __or__ = union
    __and__ = intersection
    __sub__ = difference
    __le__ = issubset

    # -- topology of R -----------------------------------------------------

    def closure(self) -> IntervalSet:
        return IntervalSet(
            Interval(iv.lo, iv.hi, iv.lo == -INF, iv.hi == INF) for iv in self.parts
        )

    def interior(self) -> IntervalSet:
        # canonical pieces never touch, so every finite end is a boundary point
        return IntervalSet._raw(tuple(
            Interval(iv.lo, iv.hi, True, True) for iv in self.parts if iv.lo < iv.hi
        ))


@dataclass(frozen=True)
class RealLine:
    """The real line with its usual topology."""

    def __repr__(self):
        return "RealLine()"


REAL_LINE = RealLine()


def random_interval_set(rng: random.Random, max_parts: int = 4, span: int = 6,
                        denominator: int = 2) -> IntervalSet:
    """Random canonical set on a small rational grid, possibly unbounded."""
    grid = [Fraction(k, denominator) for k in range(-span * denominator, span * denominator + 1)]
    parts = []
    for _ in range(rng.randint(0, max_parts)):
        a, b = sorted(rng.sample(grid, 2)) if rng.random() < 0.85 else (rng.choice(grid),) * 2
        lo = -INF if rng.random() < 0.1 else a
        hi = INF if rng.random() < 0.1 else b
        if lo == hi:
            parts.append(Interval(lo, hi))
        else:
            parts.append(Interval(lo, hi, rng.random() < 0.5, rng.random() < 0.5))
    return IntervalSet(parts)
