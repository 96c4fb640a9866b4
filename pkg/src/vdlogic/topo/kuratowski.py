"""Kuratowski closure operators and their extension from union-closed families."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, FrozenSet, Mapping, Optional, Sequence, Tuple

from .finite import FiniteSpace, points_of

__all__ = [
    "KuratowskiLike", "InvalidKuratowskiLike", "kuratowski_violation",
    "check_kuratowski", "extend_kuratowski", "space_from_closure",
    "random_kuratowski_like",
]


class InvalidKuratowskiLike(ValueError):
    """The family or the operator breaks a defining clause.

    `clause` is ``"B1"`` (∅ and X must belong to B), ``"B2"`` (B closed under
    union), ``"hat"`` (the operator must map B into B), or 1-4 for the four
    operator laws in the order empty/extensive/additive/idempotent.
    """

    def __init__(self, clause, detail: str):
        self.clause = clause
        super().__init__(f"clause {clause}: {detail}")


def kuratowski_violation(n: int, cl: Sequence[int]) -> Optional[int]:
    """First Kuratowski clause (1-4) that `cl` violates, or None.

    `cl` is indexed by bitmask and must cover all ``2**n`` subsets.
    """
    size = 1 << n
    if len(cl) != size:
        raise ValueError(f"closure map must have {size} entries")
    if cl[0] != 0:
        return 1
    for a in range(size):
        if a & ~cl[a]:
            return 2
    for a in range(size):
        for b in range(a, size):
            if cl[a | b] != cl[a] | cl[b]:
                return 3
    for a in range(size):
        if cl[cl[a]] != cl[a]:
            return 4
    return None


def check_kuratowski(n: int, cl: Sequence[int]) -> bool:
    return kuratowski_violation(n, cl) is None


@dataclass(frozen=True)
class KuratowskiLike:
    """An operator `hat` on a family `base` of subsets of ``{0..n-1}``."""

    n: int
    hat: Mapping[int, int]

    @property
    def base(self) -> FrozenSet[int]:
        return frozenset(self.hat)

    def validate(self) -> None:
        full = (1 << self.n) - 1
        base = self.base
        if 0 not in base or full not in base:
            raise InvalidKuratowskiLike("B1", "empty set and carrier must be in the family")
        for f in base:
            if f & ~full:
                raise InvalidKuratowskiLike("B1", f"{points_of(f)} is not a subset of the carrier")
            for g in base:
                if f | g not in base:
                    raise InvalidKuratowskiLike(
                        "B2", f"{points_of(f)} ∪ {points_of(g)} is not in the family")
        for f, h in self.hat.items():
            if h not in base:
                raise InvalidKuratowskiLike("hat", f"hat({points_of(f)}) leaves the family")
        if self.hat[0] != 0:
            raise InvalidKuratowskiLike(1, "hat(∅) must be ∅")
        for f, h in self.hat.items():
            if f & ~h:
                raise InvalidKuratowskiLike(2, f"{points_of(f)} is not inside its hat")
        for f in base:
            for g in base:
                if self.hat[f | g] != self.hat[f] | self.hat[g]:
                    raise InvalidKuratowskiLike(
                        3, f"hat is not additive on {points_of(f)}, {points_of(g)}")
        for f, h in self.hat.items():
            if self.hat[h] != h:
                raise InvalidKuratowskiLike(4, f"hat is not idempotent at {points_of(f)}")


def space_from_closure(n: int, cl: Sequence[int]) -> FiniteSpace:
    """The topology whose closed sets are the fixed points of `cl`."""
    full = (1 << n) - 1
    return FiniteSpace(n, tuple(full ^ a for a in range(1 << n) if cl[a] == a))


def extend_kuratowski(k: KuratowskiLike) -> Tuple[Tuple[int, ...], FiniteSpace]:
    """Extend `k` to a closure operator on every subset.

    ``cl(A)`` is the intersection of all ``hat(F)`` that contain A. Since
    ``hat(X) = X`` the family is never empty. Returns the closure map indexed
    by bitmask together with the induced space.
    """
    k.validate()
    full = (1 << k.n) - 1
    images = sorted(set(k.hat.values()))
    cl = []
    for a in range(1 << k.n):
        acc = full
        for h in images:
            if a & ~h == 0:
                acc &= h
        cl.append(acc)
    cl = tuple(cl)
    return cl, space_from_closure(k.n, cl)


def random_kuratowski_like(n: int, rng: random.Random, space: FiniteSpace = None) -> KuratowskiLike:
    """A random valid instance on `n` points.

    Picks a topology, seeds a family with a few random subsets, then closes it
    under union and under the topology's closure. The operator is that
    closure restricted to the family.
    """
    from .finite import random_space

    if space is None:
        space = random_space(n, rng)
    full = (1 << n) - 1
    table = space.closure_table
    fam = {0, full}
    for _ in range(rng.randint(0, 4)):
        fam.add(rng.randrange(1 << n))
    changed = True
    while changed:
        changed = False
        for f in list(fam):
            if table[f] not in fam:
                fam.add(table[f])
                changed = True
            for g in list(fam):
                if f | g not in fam:
                    fam.add(f | g)
                    changed = True
    hat: Dict[int, int] = {f: table[f] for f in sorted(fam)}
    return KuratowskiLike(n, hat)
