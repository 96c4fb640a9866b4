"""The ``vd`` command line.

Exit codes: 0 success or positive verdict, 1 negative verdict, 2 usage or
input error, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from . import jsonio
from .corpus import EXPECTED, corpus
from .formula import FormulaSyntaxError, expand_defs, parse, to_str
from .hilbert import check
from .search import (
    BudgetExceeded, SearchBudget, fuzz_soundness, lfi_witnesses, refute_entailment,
    refute_validity, replacement_failure_witness, replay,
)
from .semantics import (
    OracleConstraintViolated, UnboundVariable, consequence_in_model, eval_all, eval_formula,
)
from .topo import (
    DEFAULT_MAX_POINTS, CapExceeded, InvalidKuratowskiLike, KuratowskiLike, bits_of,
    enumerate_topologies, points_of,
)

OK, NEGATIVE, USAGE, BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _max_points() -> int:
    raw = os.environ.get("VD_MAX_POINTS")
    if raw is None:
        return DEFAULT_MAX_POINTS
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"VD_MAX_POINTS must be an integer, got {raw!r}") from None
    if n < 1:
        raise UsageError("VD_MAX_POINTS must be at least 1")
    return n


def _budget(args) -> SearchBudget:
    try:
        return SearchBudget(
            max_points=args.max_points if args.max_points is not None else _max_points(),
            max_oracle_candidates=args.max_candidates,
            time_limit=args.time_limit,
            max_models=args.max_models,
        )
    except ValueError as e:
        raise UsageError(str(e)) from None


def _formula(text: str):
    try:
        return parse(text)
    except FormulaSyntaxError as e:
        raise UsageError(f"cannot parse {text!r}: {e}") from None


def _emit(args, payload: dict, human: str) -> None:
    if args.json:
        print(jsonio.dumps(payload))
    else:
        print(human)


def _set_str(s) -> str:
    return str(s)


# -- subcommands -------------------------------------------------------------------

def cmd_parse(args) -> int:
    f = _formula(args.formula)
    out = {"formula": to_str(f), "type": type(f).__name__}
    if args.expand is not None:
        w = _formula(args.expand)
        try:
            out["expanded"] = to_str(expand_defs(f, w))
        except ValueError as e:
            raise UsageError(str(e)) from None
    human = out["formula"] if args.expand is None else f"{out['formula']}\n{out['expanded']}"
    _emit(args, out, human)
    return OK


def _load_derivation(source: str):
    if source.startswith("corpus:"):
        name = source[len("corpus:"):]
        table = corpus()
        if name not in table:
            raise UsageError(f"no corpus entry {name!r}; known: {', '.join(sorted(table))}")
        return table[name]
    return jsonio.load_proof(source)


def cmd_check_proof(args) -> int:
    d = _load_derivation(args.source)
    r = check(d)
    out = {
        "verdict": r.verdict,
        "conclusion": to_str(d.conclusion),
        "hypotheses": [to_str(h) for h in d.hypotheses],
        "status": [None if s is None else str(s) for s in r.status],
        "theorem_flags": list(r.theorem_flags),
        "first_error": None if r.first_error is None else
        {"line": r.first_error[0], "reason": str(r.first_error[1])},
    }
    human = r.verdict
    if r.first_error is not None:
        human += f": line {r.first_error[0]} {r.first_error[1]}"
    _emit(args, out, human)
    return OK if r.accepted else NEGATIVE


def cmd_eval(args) -> int:
    m = jsonio.load_model(args.model)
    out = {}
    lines = []
    for text in args.formulas:
        f = _formula(text)
        vals = eval_all(m, f) if args.all else {f: eval_formula(m, f)}
        for g, s in vals.items():
            out[to_str(g)] = jsonio.set_to_json(s)
            lines.append(f"{to_str(g)}\t{_set_str(s)}")
    _emit(args, {"values": out}, "\n".join(lines))
    return OK


def _report_human(r) -> str:
    m = r.model
    lines = [f"{r.kind}: {', '.join(map(to_str, r.gamma))} |- {to_str(r.target)}"
             if r.gamma else f"{r.kind}: {to_str(r.target)}"]
    lines.append(f"  space: {m.space}")
    for name in sorted(m.valuation.vars):
        lines.append(f"  v({name}) = {m.valuation.vars[name]}")
    for f, s in sorted(m.valuation.disjunctions.items(), key=lambda e: to_str(e[0])):
        lines.append(f"  table {to_str(f)} = {s}")
    for f, s in r.values.items():
        lines.append(f"  {to_str(f)} = {s}")
    return "\n".join(lines)


def _search_result(args, r, what: str) -> int:
    if r is None:
        _emit(args, {"found": False, "budget": jsonio._budget_to_json(_budget(args))},
              f"no countermodel within budget ({what} not refuted; this is not a proof)")
        return OK
    if not replay(r):
        raise RuntimeError("countermodel failed to replay")
    _emit(args, {"found": True, "report": jsonio.report_to_json(r)}, _report_human(r))
    return NEGATIVE


def cmd_entails(args) -> int:
    gamma = [_formula(g) for g in args.gamma]
    a = _formula(args.target)
    if args.model is None:
        return _search_result(args, refute_entailment(gamma, a, _budget(args)), "entailment")
    m = jsonio.load_model(args.model)
    ok = consequence_in_model(m, gamma, a)
    _emit(args, {"holds": ok}, "holds in this model" if ok else "fails in this model")
    return OK if ok else NEGATIVE


def cmd_refute(args) -> int:
    return _search_result(args, refute_validity(_formula(args.formula), _budget(args)), "validity")


def cmd_find_countermodel(args) -> int:
    gamma = [_formula(g) for g in args.gamma]
    return _search_result(args, refute_entailment(gamma, _formula(args.target), _budget(args)),
                          "entailment")


def cmd_demo_lfi(args) -> int:
    reports = lfi_witnesses()
    ok = all(replay(r) for r in reports)
    out = {"replayed": ok, "witnesses": [jsonio.report_to_json(r) for r in reports]}
    human = "\n\n".join(_report_human(r) for r in reports)
    _emit(args, out, human)
    return OK if ok else NEGATIVE


def cmd_demo_replacement(args) -> int:
    r = replacement_failure_witness()
    table = corpus()
    proofs = {name: check(table[name]).verdict for name in ("and-comm-lr", "and-comm-rl")}
    a1, a2 = parse("p & q"), parse("q & p")
    m = r.model
    same = eval_formula(m, a1) == eval_formula(m, a2)
    d1, d2 = parse("(p & q) | r"), parse("(q & p) | r")
    differ = eval_formula(m, d1) != eval_formula(m, d2)
    ok = replay(r) and same and differ and all(v == "accepted" for v in proofs.values())
    out = {"replayed": replay(r), "conjunctions_equal": same, "disjunctions_differ": differ,
           "derivations": proofs, "report": jsonio.report_to_json(r)}
    human = _report_human(r) + "\n" + "\n".join(f"  {k}: {v}" for k, v in proofs.items())
    _emit(args, out, human)
    return OK if ok else NEGATIVE


def cmd_fuzz_soundness(args) -> int:
    if args.iterations < 1:
        raise UsageError("--iterations must be at least 1")
    rep = fuzz_soundness(args.seed, args.iterations, args.models, args.max_points or _max_points(),
                         args.lines)
    out = {
        "seed": rep.seed, "iterations": rep.iterations, "derivations": rep.derivations,
        "models": rep.models,
        "violations": [dict(v, model=jsonio.model_to_json(v["model"])) for v in rep.violations],
    }
    human = (f"{rep.derivations} derivations, {rep.models} models, "
             f"{len(rep.violations)} violations")
    _emit(args, out, human)
    return OK if rep.ok else NEGATIVE


def cmd_enum_topologies(args) -> int:
    cap = args.cap if args.cap is not None else _max_points()
    try:
        spaces = list(enumerate_topologies(args.n, cap=cap))
    except CapExceeded as e:
        raise UsageError(str(e)) from None
    except ValueError as e:
        raise UsageError(str(e)) from None
    if args.count:
        _emit(args, {"n": args.n, "count": len(spaces)}, str(len(spaces)))
    else:
        out = [jsonio.space_to_json(s) for s in spaces]
        _emit(args, {"n": args.n, "count": len(spaces), "spaces": out},
              "\n".join(json.dumps(s["opens"]) for s in out))
    return OK


def _read_kuratowski(path: str) -> KuratowskiLike:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as e:
        raise jsonio.IoError(f"cannot read {path}: {e.strerror or e}") from None
    except json.JSONDecodeError as e:
        raise jsonio.SchemaError(path, "", f"invalid JSON: {e}") from None
    if not isinstance(doc, dict) or not isinstance(doc.get("n"), int) or not isinstance(doc.get("family"), list):
        raise jsonio.SchemaError(path, "", 'expected {"n": int, "family": [{"set": [...], "hat": [...]}]}')
    n = doc["n"]
    hat = {}
    for k, e in enumerate(doc["family"]):
        for key in ("set", "hat"):
            pts = e.get(key) if isinstance(e, dict) else None
            if not isinstance(pts, list) or any(not isinstance(x, int) or not 0 <= x < n for x in pts):
                raise jsonio.SchemaError(path, f"/family/{k}/{key}", f"expected point indices in 0..{n - 1}")
        f = bits_of(e["set"])
        if f in hat:
            raise jsonio.SchemaError(path, f"/family/{k}/set", "set listed twice")
        hat[f] = bits_of(e["hat"])
    return KuratowskiLike(n, hat)


def cmd_extend_closure(args) -> int:
    from .topo import extend_kuratowski

    k = _read_kuratowski(args.file)
    try:
        cl, space = extend_kuratowski(k)
    except InvalidKuratowskiLike as e:
        _emit(args, {"valid": False, "clause": e.clause, "reason": str(e)}, f"invalid: {e}")
        return NEGATIVE
    table = [{"set": points_of(a), "closure": points_of(c)} for a, c in enumerate(cl)]
    out = {"valid": True, "closure": table, "space": jsonio.space_to_json(space)}
    human = "\n".join(f"cl({t['set']}) = {t['closure']}" for t in table)
    human += f"\nopens: {out['space']['opens']}"
    _emit(args, out, human)
    return OK


# -- argument parsing ----------------------------------------------------------------

def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument("--max-points", type=int, default=None,
                        help="largest carrier to search (default: VD_MAX_POINTS or 4)")
    budget.add_argument("--max-candidates", type=int, default=8,
                        help="disjunction values tried per node")
    budget.add_argument("--time-limit", type=float, default=None, help="seconds")
    budget.add_argument("--max-models", type=int, default=None)

    p = argparse.ArgumentParser(prog="vd", description="Proof checking and topological models for vD.")
    p.add_argument("--json", action="store_true", default=False, help="machine-readable output")
    sub = p.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    s = sub.add_parser("parse", parents=[common], help="parse and pretty-print a formula")
    s.add_argument("formula")
    s.add_argument("--expand", metavar="WITNESS", help="also expand ~ using this bottom witness")
    s.set_defaults(func=cmd_parse)

    s = sub.add_parser("check-proof", parents=[common], help="check a derivation")
    s.add_argument("source", help="proof JSON file or corpus:<name> (" + ", ".join(sorted(EXPECTED)) + ")")
    s.set_defaults(func=cmd_check_proof)

    s = sub.add_parser("eval", parents=[common], help="evaluate formulas in a model file")
    s.add_argument("model")
    s.add_argument("formulas", nargs="+")
    s.add_argument("--all", action="store_true", help="print every subformula")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("entails", parents=[common, budget],
                       help="consequence in a model file, or bounded refutation search")
    s.add_argument("target")
    s.add_argument("-g", "--gamma", action="append", default=[], metavar="FORMULA")
    s.add_argument("-m", "--model", help="model JSON; without it, search for a countermodel")
    s.set_defaults(func=cmd_entails)

    s = sub.add_parser("refute", parents=[common, budget], help="search a countermodel to validity")
    s.add_argument("formula")
    s.set_defaults(func=cmd_refute)

    s = sub.add_parser("find-countermodel", parents=[common, budget],
                       help="search a countermodel to gamma |- target")
    s.add_argument("target")
    s.add_argument("-g", "--gamma", action="append", default=[], metavar="FORMULA")
    s.set_defaults(func=cmd_find_countermodel)

    s = sub.add_parser("demo-lfi", parents=[common], help="the three real-line witnesses")
    s.set_defaults(func=cmd_demo_lfi)

    s = sub.add_parser("demo-replacement", parents=[common], help="replacement failure witness")
    s.set_defaults(func=cmd_demo_replacement)

    s = sub.add_parser("fuzz-soundness", parents=[common], help="random soundness check")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--iterations", type=int, default=100)
    s.add_argument("--models", type=int, default=10, help="models per derivation")
    s.add_argument("--lines", type=int, default=50, help="length of random derivations")
    s.add_argument("--max-points", type=int, default=None)
    s.set_defaults(func=cmd_fuzz_soundness)

    s = sub.add_parser("enum-topologies", parents=[common], help="list topologies on n points")
    s.add_argument("n", type=int)
    s.add_argument("--count", action="store_true")
    s.add_argument("--cap", type=int, default=None)
    s.set_defaults(func=cmd_enum_topologies)

    s = sub.add_parser("extend-closure", parents=[common],
                       help="extend a Kuratowski-like operator to a closure")
    s.add_argument("file", help='JSON {"n": 2, "family": [{"set": [0], "hat": [0]}, ...]}')
    s.set_defaults(func=cmd_extend_closure)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code not in (0, None) else OK
    try:
        return args.func(args)
    except UsageError as e:
        print(f"vd {args.command}: {e}", file=sys.stderr)
        return USAGE
    except (jsonio.SchemaError, jsonio.InvariantError, jsonio.IoError) as e:
        print(f"vd {args.command}: {type(e).__name__}: {e}", file=sys.stderr)
        return USAGE
    except (UnboundVariable, OracleConstraintViolated) as e:
        print(f"vd {args.command}: {type(e).__name__}: {e}", file=sys.stderr)
        return USAGE
    except BudgetExceeded as e:
        print(f"vd {args.command}: budget exceeded: {e}", file=sys.stderr)
        return BUDGET


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
