"""Bundled derivations, addressable by name (``corpus:<name>`` on the CLI)."""

from __future__ import annotations

from functools import lru_cache
from typing import Dict

from .formula import parse
from .hilbert import MP, Axiom, Defn, Derivation, Hyp, Line, Rule2, deduction_transform

__all__ = ["corpus", "EXPECTED"]

# "accept" or the rejection reason expected at the given 0-based line
EXPECTED = {
    "thm2.7.i": "accept",
    "thm2.7.i-closed": "accept",
    "thm2.7.ii": "accept",
    "remark2.4": ("Rule2OnNonTheorem", 1),
    "and-comm-lr": "accept",
    "and-comm-rl": "accept",
    "gentle-explosion": "accept",
    "rule2-on-lem": "accept",
}


def _d(hyps, *lines) -> Derivation:
    return Derivation(
        tuple(parse(h) for h in hyps),
        tuple(Line(parse(f), j) for f, j in lines),
    )


def _explosion() -> Derivation:
    # {p, ~p} |- q; bot uses p as witness
    p = parse("p")
    return _d(
        ["p", "~p"],
        ("p", Hyp()),
        ("~p", Hyp()),
        ("p -> bot(p)", Defn(1, p)),
        ("bot(p)", MP(0, 2)),
        ("p & (!p & @p)", Defn(3, p)),
        ("(p & (!p & @p)) -> (!p & @p)", Axiom(5)),
        ("!p & @p", MP(4, 5)),
        ("(!p & @p) -> !p", Axiom(4)),
        ("!p", MP(6, 7)),
        ("(!p & @p) -> @p", Axiom(5)),
        ("@p", MP(6, 9)),
        ("@p -> (p -> (!p -> q))", Axiom(12)),
        ("p -> (!p -> q)", MP(10, 11)),
        ("!p -> q", MP(0, 12)),
        ("q", MP(8, 13)),
    )


@lru_cache(maxsize=None)
def _build() -> Dict[str, Derivation]:
    p, q = parse("p"), parse("q")
    out = {}
    out["thm2.7.i"] = _explosion()
    out["thm2.7.i-closed"] = deduction_transform(
        deduction_transform(out["thm2.7.i"], parse("~p")), p)
    out["thm2.7.ii"] = _d(
        [],
        ("(p -> bot(p)) | p", Axiom(8)),
        ("~p | p", Defn(0, p)),
    )
    # unrestricted rule 2 would make {p, !p} explode
    out["remark2.4"] = _d(
        ["p", "!p"],
        ("p", Hyp()),
        ("!p -> ~p", Rule2(0)),
        ("!p", Hyp()),
        ("~p", MP(2, 1)),
        ("p -> bot(q)", Defn(3, q)),
        ("bot(q)", MP(0, 4)),
        ("q & (!q & @q)", Defn(5, q)),
        ("(q & (!q & @q)) -> q", Axiom(4)),
        ("q", MP(6, 7)),
    )
    out["and-comm-lr"] = _d(
        ["p & q"],
        ("p & q", Hyp()),
        ("(p & q) -> q", Axiom(5)),
        ("q", MP(0, 1)),
        ("(p & q) -> p", Axiom(4)),
        ("p", MP(0, 3)),
        ("q -> (p -> (q & p))", Axiom(3)),
        ("p -> (q & p)", MP(2, 5)),
        ("q & p", MP(4, 6)),
    )
    out["and-comm-rl"] = _d(
        ["q & p"],
        ("q & p", Hyp()),
        ("(q & p) -> p", Axiom(5)),
        ("p", MP(0, 1)),
        ("(q & p) -> q", Axiom(4)),
        ("q", MP(0, 3)),
        ("p -> (q -> (p & q))", Axiom(3)),
        ("q -> (p & q)", MP(2, 5)),
        ("p & q", MP(4, 6)),
    )
    out["gentle-explosion"] = _d(
        ["@p", "p", "!p"],
        ("@p -> (p -> (!p -> q))", Axiom(12)),
        ("@p", Hyp()),
        ("p -> (!p -> q)", MP(1, 0)),
        ("p", Hyp()),
        ("!p -> q", MP(3, 2)),
        ("!p", Hyp()),
        ("q", MP(5, 4)),
    )
    out["rule2-on-lem"] = _d(
        [],
        ("p | !p", Axiom(9)),
        ("!(p | !p) -> ~(p | !p)", Rule2(0)),
    )
    return out


def corpus() -> Dict[str, Derivation]:
    """Name to derivation; see :data:`EXPECTED` for the intended verdicts."""
    return dict(_build())
