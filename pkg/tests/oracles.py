"""Slow, obviously-correct reference implementations used to cross-check the library.

Nothing here imports the library's set algebra: finite sets are frozensets
and interval sets are probed point by point.
"""

from fractions import Fraction
from itertools import chain, combinations


def powerset(points):
    points = list(points)
    return [frozenset(c) for c in chain.from_iterable(combinations(points, k) for k in range(len(points) + 1))]


def is_topology(n, family):
    full = frozenset(range(n))
    fam = set(family)
    if frozenset() not in fam or full not in fam:
        return False
    return all(a | b in fam and a & b in fam for a in fam for b in fam)


def brute_force_topologies(n):
    """Every family of subsets of {0..n-1} that is a topology (2**2**n candidates)."""
    subsets = powerset(range(n))
    found = []
    for mask in range(1 << len(subsets)):
        fam = [s for k, s in enumerate(subsets) if mask >> k & 1]
        if is_topology(n, fam):
            found.append(frozenset(fam))
    return found


def closure(n, opens, a):
    full = frozenset(range(n))
    acc = full
    for u in opens:
        c = full - u
        if a <= c:
            acc &= c
    return acc


def interior(opens, a):
    acc = frozenset()
    for u in opens:
        if u <= a:
            acc |= u
    return acc


def eval_finite(n, opens, env, f, table=None):
    """Direct recursive evaluation over frozensets; disjunctions get `table` or the union."""
    from vdlogic.formula import And, Circ, ClassNeg, Imp, Neg, Or, Var

    full = frozenset(range(n))
    table = table or {}

    def go(g):
        if isinstance(g, Var):
            return frozenset(env[g.name])
        if isinstance(g, And):
            return go(g.left) & go(g.right)
        if isinstance(g, Or):
            return frozenset(table.get(g, go(g.left) | go(g.right)))
        if isinstance(g, Imp):
            return (full - go(g.left)) | go(g.right)
        if isinstance(g, Neg):
            return closure(n, opens, full - go(g.arg))
        if isinstance(g, Circ):
            v = go(g.arg)
            return (full - v) | interior(opens, v)
        if isinstance(g, ClassNeg):
            return full - go(g.arg)
        raise TypeError(g)

    return go(f)


# -- interval sets, pointwise ---------------------------------------------------------

EPS = Fraction(1, 10 ** 6)


def endpoints(*sets):
    out = set()
    for s in sets:
        for iv in s.parts:
            for x in (iv.lo, iv.hi):
                if abs(x) != float("inf"):
                    out.add(Fraction(x))
    return sorted(out)


def anchors(*sets):
    """Endpoints, midpoints between them, and one point beyond each end.

    Every anchor is far (compared to EPS) from any other endpoint, so the
    EPS-neighbourhood tests below are exact there.
    """
    ends = endpoints(*sets)
    if not ends:
        return [Fraction(0)]
    pts = [ends[0] - 1, ends[-1] + 1] + ends
    for a, b in zip(ends, ends[1:]):
        pts.append((a + b) / 2)
    return sorted(set(pts))


def probes(*sets):
    """Points that separate any two unions of intervals with these endpoints."""
    pts = set(anchors(*sets))
    for x in endpoints(*sets):
        pts |= {x - EPS, x + EPS}
    return sorted(pts)


def member(s, x):
    return any(iv.contains(x) for iv in s.parts)


def in_closure(s, x):
    # exact only at anchors
    return member(s, x) or member(s, x - EPS) or member(s, x + EPS)


def in_interior(s, x):
    return member(s, x) and member(s, x - EPS) and member(s, x + EPS)
