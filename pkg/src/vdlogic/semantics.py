"""Topological valuations for vD and the truth/consequence relations.

A valuation is fixed by the values of the variables plus, for disjunctions,
an explicit table of values. A disjunction missing from the table gets the
smallest admissible value, the union of its operands. Table entries are keyed
by the disjunction formula itself (after folding ``g -> bot(w)`` back to
``~g``), never by the operand values: two different disjunctions whose
operands have equal values may get different values.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .formula import (
    And, Circ, ClassNeg, Formula, Imp, Neg, Or, Var, expand_defs, fold_defs,
    subformulas,
)
from .topo import (
    REAL_LINE, FiniteSet, FiniteSpace, IntervalSet, RealLine, carrier_of, full_set,
)

__all__ = [
    "UnboundVariable", "OracleConstraintViolated", "Valuation", "Model", "make_model",
    "eval_formula", "eval_all", "is_true", "implication_test",
    "consequence_in_model", "macro_consistency", "with_random_disjunctions",
    "random_model", "eval_random_disjunctions",
]


class UnboundVariable(KeyError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(name)

    def __str__(self):
        return f"variable {self.name!r} has no value in this model"


class OracleConstraintViolated(ValueError):
    """A table entry for ``a | b`` does not contain ``v(a) ∪ v(b)``."""

    def __init__(self, formula: Formula):
        self.formula = formula
        super().__init__(f"disjunction entry for {formula} does not contain the union of its operands")


# -- native set algebras -----------------------------------------------------

class _FiniteAlg:
    __slots__ = ("space", "full", "cl", "int")

    def __init__(self, space: FiniteSpace):
        self.space = space
        self.full = space.full
        self.cl = space.closure_table
        self.int = space.interior_table

    def native(self, s) -> int:
        if isinstance(s, FiniteSet):
            if s.space != self.space:
                from .topo import CarrierMismatch
                raise CarrierMismatch("value lives in another finite space")
            return s.bits
        raise TypeError(f"expected a FiniteSet, got {type(s).__name__}")

    def wrap(self, x: int) -> FiniteSet:
        return FiniteSet(self.space, x)

    def run(self, prog, env, disj, chooser=None):
        full, cl, it = self.full, self.cl, self.int
        vals = []
        for op, a, b, payload in prog:
            if op == 0:
                try:
                    x = env[payload]
                except KeyError:
                    raise UnboundVariable(payload) from None
            elif op == 1:
                x = vals[a] & vals[b]
            elif op == 2:
                x = (full ^ vals[a]) | vals[b]
            elif op == 3:
                x = cl[full ^ vals[a]]
            elif op == 4:
                va = vals[a]
                x = (full ^ va) | it[va]
            elif op == 5:
                x = full ^ vals[a]
            else:
                low = vals[a] | vals[b]
                key, node = payload
                x = disj.get(key)
                if x is None:
                    x = low if chooser is None else chooser(key, low)
                elif low & ~x:
                    raise OracleConstraintViolated(node)
            vals.append(x)
        return vals


class _RealAlg:
    __slots__ = ()
    space = REAL_LINE

    def native(self, s) -> IntervalSet:
        if isinstance(s, IntervalSet):
            return s
        from .topo import CarrierMismatch
        raise CarrierMismatch(f"expected an IntervalSet over R, got {type(s).__name__}")

    def wrap(self, x):
        return x

    def run(self, prog, env, disj, chooser=None):
        vals = []
        for op, a, b, payload in prog:
            if op == 0:
                try:
                    x = env[payload]
                except KeyError:
                    raise UnboundVariable(payload) from None
            elif op == 1:
                x = vals[a].intersection(vals[b])
            elif op == 2:
                x = vals[a].complement().union(vals[b])
            elif op == 3:
                x = vals[a].complement().closure()
            elif op == 4:
                va = vals[a]
                x = va.complement().union(va.interior())
            elif op == 5:
                x = vals[a].complement()
            else:
                low = vals[a].union(vals[b])
                key, node = payload
                x = disj.get(key)
                if x is None:
                    x = low if chooser is None else chooser(key, low)
                elif not low.issubset(x):
                    raise OracleConstraintViolated(node)
            vals.append(x)
        return vals


def _alg_for(space):
    if isinstance(space, FiniteSpace):
        return _FiniteAlg(space)
    if isinstance(space, RealLine):
        return _RealAlg()
    raise TypeError(f"unsupported space {space!r}")


_OPS = {Var: 0, And: 1, Imp: 2, Neg: 3, Circ: 4, ClassNeg: 5, Or: 6}


@lru_cache(maxsize=8192)
def _compile(f: Formula) -> Tuple[tuple, Tuple[Formula, ...]]:
    nodes = subformulas(f)
    index = {g: i for i, g in enumerate(nodes)}
    prog = []
    for g in nodes:
        op = _OPS[type(g)]
        if op == 0:
            prog.append((0, -1, -1, g.name))
        elif op == 6:
            prog.append((6, index[g.left], index[g.right], (fold_defs(g), g)))
        elif op in (3, 4, 5):
            prog.append((op, index[g.arg], -1, None))
        else:
            prog.append((op, index[g.left], index[g.right], None))
    return tuple(prog), tuple(nodes)


# -- models --------------------------------------------------------------------

@dataclass(frozen=True)
class Valuation:
    """Variable values plus the table of disjunction values.

    Keys of `disjunctions` must be disjunctions; they are stored folded. The
    lower-bound constraint on each entry is checked when it is used.
    """

    space: object
    vars: Mapping[str, object]
    disjunctions: Mapping[Formula, object] = field(default_factory=dict)

    def __post_init__(self):
        alg = _alg_for(self.space)
        vs = {}
        for name, s in self.vars.items():
            vs[name] = _coerce(self.space, s)
        table = {}
        for key, s in self.disjunctions.items():
            if not isinstance(key, Or):
                raise ValueError(f"disjunction table key {key} is not a disjunction")
            k = fold_defs(key)
            s = _coerce(self.space, s)
            if k in table and table[k] != s:
                raise ValueError(f"conflicting entries for {key}")
            table[k] = s
        object.__setattr__(self, "vars", vs)
        object.__setattr__(self, "disjunctions", table)
        object.__setattr__(self, "_alg", alg)
        object.__setattr__(self, "_env", {k: alg.native(v) for k, v in vs.items()})
        object.__setattr__(self, "_disj", {k: alg.native(v) for k, v in table.items()})


def _coerce(space, s):
    if isinstance(space, FiniteSpace) and not isinstance(s, FiniteSet):
        if isinstance(s, int):
            return FiniteSet(space, s)
        return space.subset(s)
    if isinstance(space, RealLine) and not isinstance(s, IntervalSet):
        raise TypeError("values over R must be IntervalSets")
    if carrier_of(s) != space:
        from .topo import CarrierMismatch
        raise CarrierMismatch("value does not live in the model's space")
    return s


@dataclass(frozen=True)
class Model:
    space: object
    valuation: Valuation

    def __post_init__(self):
        if self.valuation.space != self.space:
            raise ValueError("valuation belongs to another space")

    @property
    def carrier(self):
        """The whole space as a point set."""
        return full_set(self.space)


def make_model(space, vars: Mapping[str, object], disjunctions: Mapping = None) -> Model:
    """Build a model; finite values may be given as iterables of points."""
    return Model(space, Valuation(space, dict(vars), dict(disjunctions or {})))


# -- evaluation ------------------------------------------------------------------

def _run(m: Model, f: Formula, chooser=None):
    prog, nodes = _compile(f)
    val = m.valuation
    return val._alg.run(prog, val._env, val._disj, chooser), nodes


def eval_formula(m: Model, f: Formula):
    """The value of `f` in `m` (a FiniteSet or an IntervalSet)."""
    vals, _ = _run(m, f)
    return m.valuation._alg.wrap(vals[-1])


def eval_all(m: Model, f: Formula) -> Dict[Formula, object]:
    """Values of every subformula of `f`, children first."""
    vals, nodes = _run(m, f)
    wrap = m.valuation._alg.wrap
    return {g: wrap(x) for g, x in zip(nodes, vals)}


def _native(m: Model, f: Formula):
    vals, _ = _run(m, f)
    return vals[-1]


def is_true(m: Model, f: Formula) -> bool:
    x = _native(m, f)
    if isinstance(m.space, FiniteSpace):
        return x == m.space.full
    return x.is_full()


def _subset(m: Model, x, y) -> bool:
    if isinstance(m.space, FiniteSpace):
        return x & ~y == 0
    return x.issubset(y)


def implication_test(m: Model, a: Formula, b: Formula) -> bool:
    """``v(a) ⊆ v(b)``; equivalent to the truth of ``a -> b``."""
    return _subset(m, _native(m, a), _native(m, b))


def consequence_in_model(m: Model, gamma: Sequence[Formula], a: Formula) -> bool:
    """`a` is true, or the values of all of `gamma` meet inside ``v(a)``.

    For a finite non-empty `gamma` it is enough to test the whole list:
    dropping premises only makes the intersection larger.
    """
    if is_true(m, a):
        return True
    if not gamma:
        return False
    va = _native(m, a)
    if isinstance(m.space, FiniteSpace):
        acc = m.space.full
        for g in gamma:
            acc &= _native(m, g)
        return acc & ~va == 0
    acc = IntervalSet.full()
    for g in gamma:
        acc = acc.intersection(_native(m, g))
    return acc.issubset(va)


def macro_consistency(m: Model, f: Formula, witness: Formula) -> bool:
    """``~f`` evaluates the same as its definitional expansion with `witness`."""
    g = ClassNeg(f)
    return _native(m, g) == _native(m, expand_defs(g, witness))


# -- random models -------------------------------------------------------------

def with_random_disjunctions(m: Model, formulas: Iterable[Formula], rng: random.Random,
                             p_extend: float = 0.5) -> Model:
    """Copy of `m` whose table also fixes every disjunction in `formulas`.

    Each new entry is its operands' union, enlarged at random with
    probability `p_extend`. Existing entries are kept.
    """
    table = dict(m.valuation._disj)
    finite = isinstance(m.space, FiniteSpace)

    def choose(key, low):
        if rng.random() < p_extend:
            if finite:
                x = low | rng.getrandbits(max(m.space.n, 1)) & m.space.full
            else:
                from .topo import random_interval_set
                x = low.union(random_interval_set(rng))
        else:
            x = low
        table[key] = x
        return x

    alg = m.valuation._alg
    for f in formulas:
        prog, _ = _compile(f)
        alg.run(prog, m.valuation._env, table, choose)
    wrap = alg.wrap
    return Model(m.space, Valuation(
        m.space, m.valuation.vars, {k: wrap(v) for k, v in table.items()}))


def eval_random_disjunctions(m: Model, f: Formula, rng: random.Random,
                             p_extend: float = 0.5):
    """Value of `f` after fixing its unlisted disjunctions at random.

    Same distribution as ``eval_formula(with_random_disjunctions(m, [f], rng), f)``
    but without building the intermediate model.
    """
    alg = m.valuation._alg
    table = dict(m.valuation._disj)
    if isinstance(m.space, FiniteSpace):
        full, width = m.space.full, max(m.space.n, 1)

        def choose(key, low):
            x = low | rng.getrandbits(width) & full if rng.random() < p_extend else low
            table[key] = x
            return x
    else:
        from .topo import random_interval_set

        def choose(key, low):
            x = low.union(random_interval_set(rng)) if rng.random() < p_extend else low
            table[key] = x
            return x

    prog, _ = _compile(f)
    return alg.wrap(alg.run(prog, m.valuation._env, table, choose)[-1])


def random_model(rng: random.Random, names: Iterable[str], max_points: int = 4,
                 space=None, formulas: Iterable[Formula] = (), p_extend: float = 0.5) -> Model:
    """Random finite model over the given variable names.

    With `formulas`, the disjunctions occurring in them get random admissible
    table entries.
    """
    from .topo import random_space

    if space is None:
        space = random_space(rng.randint(1, max_points), rng)
    vs = {name: FiniteSet(space, rng.getrandbits(max(space.n, 1)) & space.full)
          for name in sorted(set(names))}
    m = make_model(space, vs)
    formulas = list(formulas)
    if formulas:
        m = with_random_disjunctions(m, formulas, rng, p_extend)
    return m
