"""Countermodel search, the real-line separation witnesses, and soundness fuzzing.

Search is bounded: a missing countermodel only means none exists within the
budget, never that the formula is valid.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from .corpus import EXPECTED, corpus
from .formula import And, Formula, parse, variables
from .generators import random_derivation
from .hilbert import Derivation, check
from .semantics import (
    Model, _compile, consequence_in_model, eval_all, make_model, random_model,
)
from .topo import (
    DEFAULT_MAX_POINTS, REAL_LINE, FiniteSet, FiniteSpace, IntervalSet,
    enumerate_topologies, intersection, is_full, issubset,
)

__all__ = [
    "SearchBudget", "BudgetExceeded", "CounterexampleReport", "refute_validity",
    "refute_entailment", "lfi_witnesses", "replacement_failure_witness",
    "FuzzReport", "fuzz_soundness", "replay",
]

REFUTES_VALIDITY = "refutes-validity"
REFUTES_ENTAILMENT = "refutes-entailment"


class BudgetExceeded(RuntimeError):
    """The search ran out of time or model budget before finishing."""


@dataclass(frozen=True)
class SearchBudget:
    max_points: int = DEFAULT_MAX_POINTS
    max_oracle_candidates: int = 8
    time_limit: Optional[float] = None  # seconds
    max_models: Optional[int] = None

    def __post_init__(self):
        if self.max_points < 1 or self.max_oracle_candidates < 1:
            raise ValueError("budget limits must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time limit must be positive")
        if self.max_models is not None and self.max_models < 1:
            raise ValueError("model limit must be positive")


@dataclass(frozen=True)
class CounterexampleReport:
    """A replayable countermodel.

    For entailments, `model` has ``⋂ v(gamma) ⊄ v(target)`` and
    `validity_model` has ``v(target)`` different from the carrier; the first
    property implies the second, so the two usually coincide.
    """

    kind: str
    gamma: Tuple[Formula, ...]
    target: Formula
    model: Model
    values: Dict[Formula, object]
    validity_model: Model = None
    budget: Optional[SearchBudget] = None


def _values(m: Model, formulas: Sequence[Formula]) -> Dict[Formula, object]:
    out = {}
    for f in formulas:
        out.update(eval_all(m, f))
    return out


def replay(report: CounterexampleReport) -> bool:
    """Re-evaluate the stored model and compare against the stored values."""
    m = report.model
    fresh = _values(m, list(report.gamma) + [report.target] + list(report.values))
    if any(fresh[f] != v for f, v in report.values.items()):
        return False
    if is_full(fresh[report.target]):
        return False
    if report.kind == REFUTES_ENTAILMENT and report.gamma:
        meet = fresh[report.gamma[0]]
        for g in report.gamma[1:]:
            meet = intersection(meet, fresh[g])
        if issubset(meet, fresh[report.target]):
            return False
        vm = report.validity_model or m
        if is_full(eval_all(vm, report.target)[report.target]):
            return False
    return True


# -- bounded search over finite models ----------------------------------------

class _Search:
    """Depth-first walk over topologies, assignments and disjunction values."""

    def __init__(self, gamma: Sequence[Formula], target: Formula, budget: SearchBudget):
        self.gamma = tuple(gamma)
        self.target = target
        self.budget = budget
        root = target
        for g in reversed(self.gamma):
            root = And(g, root)
        self.prog, nodes = _compile(root)
        pos = {g: i for i, g in enumerate(nodes)}
        self.t_idx = pos[target]
        self.g_idx = [pos[g] for g in self.gamma]
        self.names = variables(root)
        self.leaves = 0
        self.deadline = None if budget.time_limit is None else time.monotonic() + budget.time_limit

    def _tick(self):
        self.leaves += 1
        if self.budget.max_models is not None and self.leaves > self.budget.max_models:
            raise BudgetExceeded(f"more than {self.budget.max_models} candidate models")
        if self.deadline is not None and self.leaves % 256 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded(f"time limit of {self.budget.time_limit}s exceeded")

    def _hit(self, vals, full) -> bool:
        t = vals[self.t_idx]
        if t == full:
            return False
        if not self.gamma:
            return True
        meet = full
        for i in self.g_idx:
            meet &= vals[i]
        return meet & ~t != 0

    def _walk(self, space, pos, vals, table, env):
        # vals is shared along the current branch and truncated on backtrack
        prog = self.prog
        full = space.full
        cl, it = space.closure_table, space.interior_table
        base = len(vals)
        while pos < len(prog):
            op, a, b, payload = prog[pos]
            if op == 0:
                x = env[payload]
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
                key = payload[0]
                if key in table:
                    x = table[key]
                    if low & ~x:
                        del vals[base:]
                        return None
                else:
                    mark = len(vals)
                    for cand in self._candidates(space, low, vals):
                        table[key] = cand
                        vals.append(cand)
                        found = self._walk(space, pos + 1, vals, table, env)
                        if found is not None:
                            return found
                        del vals[mark:]
                    del table[key]
                    del vals[base:]
                    return None
            vals.append(x)
            pos += 1
        self._tick()
        hit = self._hit(vals, full)
        del vals[base:]
        return dict(table) if hit else None

    def _candidates(self, space, low, vals):
        gens = [0, space.full]
        gens.extend(space.opens)
        gens.extend(space.closeds)
        gens.extend(vals)
        seen = []
        for g in gens:
            c = low | g
            if c not in seen:
                seen.append(c)
            if len(seen) >= self.budget.max_oracle_candidates:
                break
        return seen

    def run(self) -> Optional[Model]:
        k = len(self.names)
        for n in range(1, self.budget.max_points + 1):
            for space in enumerate_topologies(n, cap=max(self.budget.max_points, DEFAULT_MAX_POINTS)):
                for assignment in product(range(1 << n), repeat=k):
                    env = dict(zip(self.names, assignment))
                    table = self._walk(space, 0, [], {}, env)
                    if table is not None:
                        return make_model(
                            space,
                            {v: FiniteSet(space, b) for v, b in env.items()},
                            {key: FiniteSet(space, b) for key, b in table.items()},
                        )
        return None


def _as_formula(f) -> Formula:
    return parse(f) if isinstance(f, str) else f


def refute_validity(f, budget: SearchBudget = SearchBudget()) -> Optional[CounterexampleReport]:
    """Smallest-first finite model in which `f` is not true, or None."""
    f = _as_formula(f)
    m = _Search((), f, budget).run()
    if m is None:
        return None
    return CounterexampleReport(REFUTES_VALIDITY, (), f, m, _values(m, [f]), m, budget)


def refute_entailment(gamma, a, budget: SearchBudget = SearchBudget()) -> Optional[CounterexampleReport]:
    """Certificate that `a` is not a consequence of the finite list `gamma`.

    Needs a model where ``v(a)`` is not the carrier (so `a` is not valid) and
    one where ``⋂ v(gamma) ⊄ v(a)`` (so no finite subset of `gamma` works,
    since dropping premises only enlarges the intersection). A single model
    of the second kind is also of the first kind.
    """
    gamma = tuple(_as_formula(g) for g in gamma)
    a = _as_formula(a)
    if not gamma:
        r = refute_validity(a, budget)
        if r is None:
            return None
        return CounterexampleReport(REFUTES_ENTAILMENT, (), a, r.model, r.values, r.model, budget)
    m = _Search(gamma, a, budget).run()
    if m is None:
        return None
    return CounterexampleReport(
        REFUTES_ENTAILMENT, gamma, a, m, _values(m, list(gamma) + [a]), m, budget)


# -- fixed witnesses -----------------------------------------------------------

def lfi_witnesses() -> List[CounterexampleReport]:
    """The real-line model with ``v(p) = [0,1)`` and ``v(q) = (2,3)``.

    It refutes {p, !p} |- q, {@p, p} |- q and {@p, !p} |- q. Each report also
    carries the value of the corresponding closed implication.
    """
    m = make_model(REAL_LINE, {
        "p": IntervalSet.closed_open(0, 1),
        "q": IntervalSet.open(2, 3),
    })
    q = parse("q")
    cases = [
        (("p", "!p"), "p -> (!p -> q)"),
        (("@p", "p"), "@p -> (p -> q)"),
        (("@p", "!p"), "@p -> (!p -> q)"),
    ]
    out = []
    for gamma, closed in cases:
        gamma = tuple(parse(g) for g in gamma)
        values = _values(m, list(gamma) + [q, parse(closed)])
        out.append(CounterexampleReport(REFUTES_ENTAILMENT, gamma, q, m, values, m))
    return out


def replacement_failure_witness() -> CounterexampleReport:
    """Model where ``p & q`` and ``q & p`` agree but ``(p & q) | r`` and
    ``(q & p) | r`` do not.

    The report refutes ``{(q & p) | r} |- (p & q) | r``; together with the
    two commutation derivations in the corpus this shows that replacing
    interderivable formulas inside a disjunction is not sound.
    """
    space = FiniteSpace.discrete(2)
    a1, a2 = parse("(p & q) | r"), parse("(q & p) | r")
    m = make_model(
        space,
        {"p": [0], "q": [0], "r": []},
        {a1: FiniteSet(space, 0b01), a2: FiniteSet(space, 0b11)},
    )
    values = _values(m, [a2, a1])
    return CounterexampleReport(REFUTES_ENTAILMENT, (a2,), a1, m, values, m)


# -- soundness fuzzing -----------------------------------------------------------

@dataclass
class FuzzReport:
    seed: int
    iterations: int
    derivations: int = 0
    models: int = 0
    violations: List[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _first_bad_line(d: Derivation, m: Model) -> Optional[int]:
    for k in range(len(d.lines)):
        if not consequence_in_model(m, d.hypotheses, d.lines[k].formula):
            return k
    return None


def fuzz_soundness(seed: int, iterations: int, models_per_derivation: int = 10,
                   max_points: int = 4, lines: int = 50,
                   derivations: Sequence[Derivation] = None) -> FuzzReport:
    """Check accepted derivations against random finite models.

    Each iteration takes one derivation (the accepted corpus entries first,
    then random ones of `lines` lines) and tests that its conclusion follows
    from its hypotheses in `models_per_derivation` random models, with random
    admissible disjunction values. A violation records the shortest failing
    prefix of the derivation and would point at a bug.
    """
    if iterations < 1:
        raise ValueError("iterations must be at least 1")
    rng = random.Random(seed)
    if derivations is None:
        base = [d for name, d in sorted(corpus().items()) if EXPECTED[name] == "accept"]
    else:
        base = list(derivations)
    report = FuzzReport(seed, iterations)
    for it in range(iterations):
        if it < len(base):
            d = base[it]
        else:
            d = random_derivation(rng, lines)
        if not check(d).accepted:
            continue
        report.derivations += 1
        formulas = list(d.hypotheses) + [d.conclusion]
        names = set()
        for f in formulas:
            names.update(variables(f))
        for _ in range(models_per_derivation):
            m = random_model(rng, names, max_points, formulas=formulas)
            report.models += 1
            if not consequence_in_model(m, d.hypotheses, d.conclusion):
                k = _first_bad_line(d, m)
                report.violations.append({
                    "iteration": it,
                    "hypotheses": [str(h) for h in d.hypotheses],
                    "conclusion": str(d.conclusion),
                    "first_bad_line": k,
                    "model": m,
                })
    return report
