import random
from itertools import product

import pytest

from vdlogic.topo import (
    FiniteSpace, InvalidKuratowskiLike, KuratowskiLike, check_kuratowski,
    enumerate_topologies, extend_kuratowski, kuratowski_violation, random_kuratowski_like,
    space_from_closure,
)


def test_identity_and_indiscrete_are_closures():
    n = 3
    assert check_kuratowski(n, list(range(1 << n)))
    full = (1 << n) - 1
    assert check_kuratowski(n, [0] + [full] * full)


def test_violation_clauses():
    n = 2
    assert kuratowski_violation(n, [0b01 | a for a in range(4)]) == 1
    assert kuratowski_violation(n, [0, 0, 0b10, 0b11]) == 2  # {0} not in cl({0})
    # cl({0,1}) = X but cl({0}) ∪ cl({1}) = {0,1}
    assert kuratowski_violation(3, [0, 1, 2, 7, 4, 5, 6, 7]) == 3
    # extensive and additive but not idempotent: 0 -> {0,1}, 1 -> {1,2}, 2 -> {2}
    cl = []
    step = {0: 0b011, 1: 0b110, 2: 0b100}
    for a in range(8):
        acc = 0
        for x in range(3):
            if a >> x & 1:
                acc |= step[x]
        cl.append(acc)
    assert kuratowski_violation(3, cl) == 4


def test_closure_of_every_topology_passes():
    for n in range(4):
        for s in enumerate_topologies(n):
            assert check_kuratowski(n, s.closure_table)
            assert space_from_closure(n, s.closure_table) == s


def test_sierpinski_extension():
    k = KuratowskiLike(2, {0: 0, 0b01: 0b01, 0b11: 0b11})
    cl, space = extend_kuratowski(k)
    assert cl[0b10] == 0b11
    assert space == FiniteSpace.from_points(2, [[], [1], [0, 1]])


def test_indiscrete_extension():
    n = 3
    full = (1 << n) - 1
    k = KuratowskiLike(n, {0: 0, 0b001: full, 0b011: full, full: full})
    cl, space = extend_kuratowski(k)
    assert cl == tuple([0] + [full] * full)
    assert space == FiniteSpace.indiscrete(n)


def test_full_powerset_family_gives_hat_back():
    for n in range(4):
        for s in enumerate_topologies(n):
            hat = {a: s.closure_table[a] for a in range(1 << n)}
            cl, _ = extend_kuratowski(KuratowskiLike(n, hat))
            assert cl == s.closure_table


def _all_kuratowski_like(n):
    """Every (family, hat) on n points that satisfies the definition, by brute force."""
    full = (1 << n) - 1
    subsets = range(1 << n)
    for mask in range(1 << (1 << n)):
        fam = [a for a in subsets if mask >> a & 1]
        fs = set(fam)
        if 0 not in fs or full not in fs or any(a | b not in fs for a in fam for b in fam):
            continue
        for images in product(fam, repeat=len(fam)):
            hat = dict(zip(fam, images))
            k = KuratowskiLike(n, hat)
            try:
                k.validate()
            except InvalidKuratowskiLike:
                continue
            yield k


def test_exhaustive_two_points():
    count = 0
    for k in _all_kuratowski_like(2):
        cl, space = extend_kuratowski(k)
        assert check_kuratowski(2, cl)
        assert all(cl[f] == h for f, h in k.hat.items())
        count += 1
    assert count > 0


@pytest.mark.parametrize("hat, clause", [
    ({0b01: 0b01, 0b11: 0b11}, "B1"),
    ({0: 0, 0b01: 0b01, 0b10: 0b10, 0b111: 0b111}, "B2"),
    ({0: 0, 0b001: 0b011, 0b111: 0b111}, "hat"),
    ({0: 0b01, 0b01: 0b01, 0b11: 0b11}, 1),
    ({0: 0, 0b01: 0, 0b11: 0b11}, 2),
    ({0: 0, 0b001: 0b011, 0b011: 0b111, 0b111: 0b111}, 4),
])
def test_invalid_kuratowski_like(hat, clause):
    n = 3 if any(v > 3 or f > 3 for f, v in hat.items()) else 2
    with pytest.raises(InvalidKuratowskiLike) as e:
        extend_kuratowski(KuratowskiLike(n, hat))
    assert e.value.clause == clause


def test_additivity_violation_reported():
    with pytest.raises(InvalidKuratowskiLike) as e:
        extend_kuratowski(KuratowskiLike(3, {0: 0, 1: 1, 2: 2, 3: 7, 7: 7}))
    assert e.value.clause == 3


def test_random_instances():
    rng = random.Random(11)
    for _ in range(300):
        k = random_kuratowski_like(rng.randint(0, 4), rng)
        k.validate()
        cl, space = extend_kuratowski(k)
        assert check_kuratowski(k.n, cl)
        assert all(cl[f] == h for f, h in k.hat.items())
        assert space.closure_table == cl

