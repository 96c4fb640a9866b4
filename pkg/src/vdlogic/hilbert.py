"""Derivations in the Hilbert system for vD and their checker.

Rules: axiom instances (schemas 1-18), hypotheses, modus ponens, the
negation rule ``a / !a -> ~a`` (only when `a` is a theorem), and ``defn``
steps that rewrite ``~g`` to or from ``g -> bot(w)`` for a stated witness `w`.

A line counts as a theorem when its justification ancestry uses no
hypothesis. That is the checkable form of the negation rule's side condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple, Union

from .formula import (
    SCHEMAS, ClassNeg, Formula, Imp, Neg, fold_defs, match_schema,
)

__all__ = [
    "Hyp", "Axiom", "MP", "Rule2", "Defn", "Justification", "Line", "Derivation",
    "Reason", "CheckReport", "DeductionError", "check", "deduction_transform",
]


@dataclass(frozen=True)
class Hyp:
    pass


@dataclass(frozen=True)
class Axiom:
    id: int


@dataclass(frozen=True)
class MP:
    """Modus ponens: line `i` holds ``a`` and line `j` holds ``a -> b``."""

    i: int
    j: int


@dataclass(frozen=True)
class Rule2:
    i: int


@dataclass(frozen=True)
class Defn:
    i: int
    witness: Formula


Justification = Union[Hyp, Axiom, MP, Rule2, Defn]


@dataclass(frozen=True)
class Line:
    formula: Formula
    just: Justification


@dataclass(frozen=True)
class Derivation:
    hypotheses: Tuple[Formula, ...]
    lines: Tuple[Line, ...]

    def __post_init__(self):
        object.__setattr__(self, "hypotheses", tuple(self.hypotheses))
        object.__setattr__(self, "lines", tuple(self.lines))
        if not self.lines:
            raise ValueError("a derivation needs at least one line")

    @property
    def conclusion(self) -> Formula:
        return self.lines[-1].formula


class Reason(str, Enum):
    NotAHypothesis = "NotAHypothesis"
    SchemaMismatch = "SchemaMismatch"
    MPShapeMismatch = "MPShapeMismatch"
    Rule2OnNonTheorem = "Rule2OnNonTheorem"
    Rule2ShapeMismatch = "Rule2ShapeMismatch"
    DefnMismatch = "DefnMismatch"
    BadLineRef = "BadLineRef"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class CheckReport:
    accepted: bool
    status: Tuple[Optional[Reason], ...]  # None means the line is fine
    theorem_flags: Tuple[bool, ...]
    first_error: Optional[Tuple[int, Reason]] = None

    @property
    def verdict(self) -> str:
        return "accepted" if self.accepted else "rejected"


def _refs(just) -> Tuple[int, ...]:
    if isinstance(just, MP):
        return (just.i, just.j)
    if isinstance(just, (Rule2, Defn)):
        return (just.i,)
    return ()


def check(d: Derivation) -> CheckReport:
    """Check every line of `d` independently and compute theorem flags."""
    hyps = set(d.hypotheses)
    status: List[Optional[Reason]] = []
    flags: List[bool] = []
    for k, line in enumerate(d.lines):
        f, just = line.formula, line.just
        refs = _refs(just)
        if any(not isinstance(r, int) or r < 0 or r >= k for r in refs):
            status.append(Reason.BadLineRef)
            flags.append(False)
            continue
        err = None
        if isinstance(just, Hyp):
            if f not in hyps:
                err = Reason.NotAHypothesis
            flag = False
        elif isinstance(just, Axiom):
            if just.id not in SCHEMAS or match_schema(f, just.id) is None:
                err = Reason.SchemaMismatch
            flag = True
        elif isinstance(just, MP):
            if d.lines[just.j].formula != Imp(d.lines[just.i].formula, f):
                err = Reason.MPShapeMismatch
            flag = flags[just.i] and flags[just.j]
        elif isinstance(just, Rule2):
            a = d.lines[just.i].formula
            flag = flags[just.i]
            if not flag:
                err = Reason.Rule2OnNonTheorem
            elif f != Imp(Neg(a), ClassNeg(a)):
                err = Reason.Rule2ShapeMismatch
        elif isinstance(just, Defn):
            a = d.lines[just.i].formula
            if fold_defs(a, just.witness) != fold_defs(f, just.witness):
                err = Reason.DefnMismatch
            flag = flags[just.i]
        else:
            raise TypeError(f"unknown justification {just!r}")
        status.append(err)
        flags.append(flag)
    first = next(((k, s) for k, s in enumerate(status) if s is not None), None)
    return CheckReport(first is None, tuple(status), tuple(flags), first)


# -- deduction theorem ---------------------------------------------------------

class DeductionError(ValueError):
    """`deduction_transform` was called outside its precondition."""

    def __init__(self, kind: str, detail: str):
        self.kind = kind
        super().__init__(f"{kind}: {detail}")


def deduction_transform(d: Derivation, a: Formula) -> Derivation:
    """Turn a derivation of ``b`` from ``G + [a]`` into one of ``a -> b`` from G.

    Line by line: each use of `a` becomes the five-line proof of ``a -> a``;
    other hypotheses and every theorem line ``x`` are kept and followed by
    axiom 1 ``x -> (a -> x)`` and MP; a non-theorem MP step combines the two
    transformed premises through axiom 2; a non-theorem defn step is the same
    rewrite applied under ``a ->``. Rule 2 lines are always theorems.
    """
    report = check(d)
    if not report.accepted:
        raise DeductionError("PreconditionViolated", "the derivation does not check")
    if a not in d.hypotheses:
        raise DeductionError("NotAHypothesis", f"{a} is not a hypothesis")

    out: List[Line] = []
    where: List[int] = []  # where[k]: index in `out` of the line a -> phi_k
    copied = {}  # theorem lines of d re-emitted verbatim, by original index

    def emit(f: Formula, just) -> int:
        out.append(Line(f, just))
        return len(out) - 1

    for k, line in enumerate(d.lines):
        f, just = line.formula, line.just
        if report.theorem_flags[k] or (isinstance(just, Hyp) and f != a):
            if isinstance(just, MP):
                just = MP(copied[just.i], copied[just.j])
            elif isinstance(just, Rule2):
                just = Rule2(copied[just.i])
            elif isinstance(just, Defn):
                just = Defn(copied[just.i], just.witness)
            src = emit(f, just)
            if report.theorem_flags[k]:
                copied[k] = src
            ax = emit(Imp(f, Imp(a, f)), Axiom(1))
            where.append(emit(Imp(a, f), MP(src, ax)))
        elif isinstance(just, Hyp):
            aa = Imp(a, a)
            a_aa = Imp(a, aa)
            i1 = emit(Imp(a, Imp(aa, a)), Axiom(1))
            i2 = emit(Imp(Imp(a, Imp(aa, a)), Imp(a_aa, aa)), Axiom(2))
            i3 = emit(Imp(a_aa, aa), MP(i1, i2))
            i4 = emit(a_aa, Axiom(1))
            where.append(emit(aa, MP(i4, i3)))
        elif isinstance(just, MP):
            x = d.lines[just.i].formula
            pi, pj = where[just.i], where[just.j]
            ax = emit(Imp(Imp(a, Imp(x, f)), Imp(Imp(a, x), Imp(a, f))), Axiom(2))
            mid = emit(Imp(Imp(a, x), Imp(a, f)), MP(pj, ax))
            where.append(emit(Imp(a, f), MP(pi, mid)))
        elif isinstance(just, Defn):
            where.append(emit(Imp(a, f), Defn(where[just.i], just.witness)))
        else:
            # Rule2 lines of an accepted derivation are theorem-flagged
            raise AssertionError(f"unexpected non-theorem line {k}")

    hyps = tuple(h for h in d.hypotheses if h != a)
    return Derivation(hyps, tuple(out))
