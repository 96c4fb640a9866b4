"""Random formulas, axiom instances and accepted derivations for fuzzing."""

from __future__ import annotations

import random
from typing import List, Sequence

from .formula import (
    SCHEMAS, And, Circ, ClassNeg, Formula, Imp, Neg, Or, Schema, Var, bot,
    expand_defs, fold_defs, match_schema, size,
)
from .hilbert import MP, Axiom, Defn, Derivation, Hyp, Line, Rule2

__all__ = ["random_formula", "random_axiom_instance", "random_derivation"]

_UNARY = (Neg, Circ, ClassNeg)
_BINARY = (And, Or, Imp)


def random_formula(rng: random.Random, names: Sequence[str] = ("p", "q", "r"),
                   depth: int = 3, p_bot: float = 0.03) -> Formula:
    if depth <= 0 or rng.random() < 0.25:
        return Var(rng.choice(names))
    r = rng.random()
    if r < p_bot:
        return bot(random_formula(rng, names, depth - 1, 0))
    if r < 0.4:
        return rng.choice(_UNARY)(random_formula(rng, names, depth - 1, p_bot))
    kind = rng.choice(_BINARY)
    return kind(random_formula(rng, names, depth - 1, p_bot),
                random_formula(rng, names, depth - 1, p_bot))


def random_axiom_instance(rng: random.Random, schema_id: int,
                          names: Sequence[str] = ("p", "q", "r"), depth: int = 2) -> Formula:
    s = SCHEMAS[schema_id]
    return s.instantiate(**{m: random_formula(rng, names, depth) for m in s.metavars})


def _antecedent_schema(s: Schema):
    if type(s.pattern) is Imp:
        return Schema(s.id, s.pattern.left, s.metavars)
    return None


def random_derivation(rng: random.Random, n_lines: int = 20,
                      names: Sequence[str] = ("p", "q", "r"), n_hyps: int = None,
                      max_size: int = 60) -> Derivation:
    """A random derivation that the checker accepts.

    Mixes hypotheses, axiom instances (often with the antecedent matched to
    an earlier line so MP becomes available), MP, rule 2 on theorem lines and
    defn rewrites.
    """
    if n_hyps is None:
        n_hyps = rng.randint(1, 3)
    hyps = [random_formula(rng, names, 2) for _ in range(n_hyps)]
    lines: List[Line] = []
    flags: List[bool] = []
    index = {}

    def add(f: Formula, just, flag: bool) -> None:
        lines.append(Line(f, just))
        flags.append(flag)
        index.setdefault(f, len(lines) - 1)

    def axiom_step() -> bool:
        sid = rng.randint(1, 18)
        s = SCHEMAS[sid]
        binding = {}
        ante = _antecedent_schema(s)
        if lines and ante is not None and rng.random() < 0.7:
            target = rng.choice(lines).formula
            b = match_schema(target, ante)
            if b is not None:
                binding.update(b)
        for m in s.metavars:
            if m not in binding:
                if lines and rng.random() < 0.3:
                    binding[m] = rng.choice(lines).formula
                else:
                    binding[m] = random_formula(rng, names, 2)
        f = s.instantiate(**binding)
        if size(f) > max_size:
            return False
        add(f, Axiom(sid), True)
        return True

    def mp_step() -> bool:
        options = []
        for j, line in enumerate(lines):
            g = line.formula
            if type(g) is Imp and g.left in index:
                options.append((index[g.left], j))
        if not options:
            return False
        i, j = rng.choice(options)
        add(lines[j].formula.right, MP(i, j), flags[i] and flags[j])
        return True

    def rule2_step() -> bool:
        options = [k for k, fl in enumerate(flags) if fl and size(lines[k].formula) < max_size // 2]
        if not options:
            return False
        k = rng.choice(options)
        a = lines[k].formula
        add(Imp(Neg(a), ClassNeg(a)), Rule2(k), True)
        return True

    def defn_step() -> bool:
        k = rng.randrange(len(lines)) if lines else None
        if k is None:
            return False
        f = lines[k].formula
        w = Var(rng.choice(names))
        if rng.random() < 0.3:
            w = rng.choice((Neg, Circ))(w)
        g = expand_defs(f, w)
        if g == f:
            # nothing to expand: try folding bottoms that use some witness
            for sub in _bottom_witnesses(f):
                w = sub
                g = fold_defs(f, w)
                break
        if g == f or size(g) > max_size:
            return False
        add(g, Defn(k, w), flags[k])
        return True

    steps = [
        (0.15, lambda: bool(hyps) and (add(rng.choice(hyps), Hyp(), False) or True)),
        (0.35, axiom_step),
        (0.35, mp_step),
        (0.05, rule2_step),
        (0.10, defn_step),
    ]
    weights = [w for w, _ in steps]
    attempts = 0
    while len(lines) < n_lines and attempts < n_lines * 20:
        attempts += 1
        _, step = rng.choices(steps, weights)[0]
        step()
    if not lines:
        add(random_axiom_instance(rng, 1, names), Axiom(1), True)
    return Derivation(tuple(hyps), tuple(lines))


def _bottom_witnesses(f: Formula):
    from .formula import is_bot, subformulas

    for g in subformulas(f):
        if type(g) is Imp:
            w = is_bot(g.right)
            if w is not None:
                yield w
