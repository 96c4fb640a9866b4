"""JSON formats for point sets, spaces, models, derivations and reports.

Structural problems are reported as :class:`SchemaError` with a JSON pointer
into the document; semantic ones (a disjunction entry below its lower bound)
as :class:`InvariantError`.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Any, Dict, Optional

import jsonschema

from .formula import Formula, FormulaSyntaxError, Or, parse, to_str
from .hilbert import MP, Axiom, Defn, Derivation, Hyp, Line, Rule2
from .search import CounterexampleReport, SearchBudget
from .semantics import Model, OracleConstraintViolated, eval_formula, make_model
from .topo import (
    REAL_LINE, FiniteSet, FiniteSpace, Interval, IntervalSet, RealLine, bits_of,
)

__all__ = [
    "IoError", "SchemaError", "InvariantError",
    "set_to_json", "set_from_json", "space_to_json", "space_from_json",
    "model_to_json", "model_from_json", "derivation_to_json", "derivation_from_json",
    "report_to_json", "report_from_json", "load_model", "load_proof", "dumps",
]


class IoError(OSError):
    pass


class SchemaError(ValueError):
    def __init__(self, path: Optional[str], pointer: str, reason: str):
        self.path = path
        self.pointer = pointer
        self.reason = reason
        where = f"{path}: " if path else ""
        super().__init__(f"{where}{pointer or '/'}: {reason}")


class InvariantError(ValueError):
    def __init__(self, reason: str, formula: Formula = None):
        self.formula = formula
        super().__init__(reason)


# -- structural schemas --------------------------------------------------------

_ENDPOINT = {"type": "string", "pattern": r"^\s*([+-]?inf|[+-]?\d+(/\d+)?|[+-]?\d*\.\d+)\s*$"}
_INTERVAL = {
    "type": "object",
    "required": ["lo", "hi", "lo_open", "hi_open"],
    "properties": {
        "lo": _ENDPOINT, "hi": _ENDPOINT,
        "lo_open": {"type": "boolean"}, "hi_open": {"type": "boolean"},
    },
    "additionalProperties": False,
}
_POINTS = {"type": "array", "items": {"type": "integer", "minimum": 0}}
_SET = {"type": "array", "items": {"anyOf": [{"type": "integer", "minimum": 0}, _INTERVAL]}}
_SPACE = {
    "type": "object",
    "required": ["kind"],
    "properties": {
        "kind": {"enum": ["finite", "real"]},
        "n": {"type": "integer", "minimum": 0},
        "opens": {"type": "array", "items": _POINTS},
    },
    "if": {"properties": {"kind": {"const": "finite"}}},
    "then": {"required": ["n", "opens"]},
}
MODEL_SCHEMA = {
    "type": "object",
    "required": ["space", "vars"],
    "properties": {
        "space": _SPACE,
        "vars": {"type": "object", "additionalProperties": _SET},
        "disjunctions": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["formula", "value"],
                "properties": {"formula": {"type": "string"}, "value": _SET},
            },
        },
    },
}
_JUST = {
    "type": "object",
    "required": ["kind"],
    "properties": {
        "kind": {"enum": ["hyp", "axiom", "mp", "rule2", "defn"]},
        "id": {"type": "integer"},
        "i": {"type": "integer"},
        "j": {"type": "integer"},
        "witness": {"type": "string"},
    },
    "allOf": [
        {"if": {"properties": {"kind": {"const": "axiom"}}}, "then": {"required": ["id"]}},
        {"if": {"properties": {"kind": {"const": "mp"}}}, "then": {"required": ["i", "j"]}},
        {"if": {"properties": {"kind": {"const": "rule2"}}}, "then": {"required": ["i"]}},
        {"if": {"properties": {"kind": {"const": "defn"}}}, "then": {"required": ["i", "witness"]}},
    ],
}
PROOF_SCHEMA = {
    "type": "object",
    "required": ["lines"],
    "properties": {
        "hypotheses": {"type": "array", "items": {"type": "string"}},
        "lines": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["formula", "just"],
                "properties": {"formula": {"type": "string"}, "just": _JUST},
            },
        },
    },
}


def _pointer(parts) -> str:
    return "".join("/" + str(p).replace("~", "~0").replace("/", "~1") for p in parts)


def _validate(doc, schema, path):
    v = jsonschema.Draft202012Validator(schema)
    errors = sorted(v.iter_errors(doc), key=lambda e: (len(e.absolute_path), list(map(str, e.absolute_path))))
    if errors:
        e = errors[0]
        raise SchemaError(path, _pointer(e.absolute_path), e.message)


def _formula(text: str, path, pointer) -> Formula:
    try:
        return parse(text)
    except FormulaSyntaxError as e:
        raise SchemaError(path, pointer, str(e)) from None


# -- point sets and spaces -------------------------------------------------------------

def _endpoint_str(x) -> str:
    if x == math.inf:
        return "inf"
    if x == -math.inf:
        return "-inf"
    return str(Fraction(x))


def set_to_json(s) -> list:
    if isinstance(s, FiniteSet):
        return s.points
    return [
        {"lo": _endpoint_str(iv.lo), "hi": _endpoint_str(iv.hi),
         "lo_open": iv.lo_open, "hi_open": iv.hi_open}
        for iv in s.parts
    ]


def set_from_json(space, obj, path=None, pointer=""):
    if isinstance(space, FiniteSpace):
        if any(not isinstance(x, int) or isinstance(x, bool) for x in obj):
            raise SchemaError(path, pointer, "finite sets are arrays of point indices")
        for k, x in enumerate(obj):
            if not 0 <= x < space.n:
                raise SchemaError(path, f"{pointer}/{k}", f"point {x} outside 0..{space.n - 1}")
        return FiniteSet(space, bits_of(obj))
    parts = []
    for k, iv in enumerate(obj):
        if not isinstance(iv, dict):
            raise SchemaError(path, f"{pointer}/{k}", "intervals are objects")
        try:
            parts.append(Interval(iv["lo"], iv["hi"], iv["lo_open"], iv["hi_open"]))
        except (KeyError, ValueError, ZeroDivisionError) as e:
            raise SchemaError(path, f"{pointer}/{k}", f"bad interval: {e}") from None
    return IntervalSet(parts)


def space_to_json(space) -> dict:
    if isinstance(space, RealLine):
        return {"kind": "real"}
    return {"kind": "finite", "n": space.n,
            "opens": [FiniteSet(space, u).points for u in space.opens]}


def space_from_json(obj, path=None, pointer="") -> Any:
    if obj.get("kind", "finite") == "real":
        return REAL_LINE
    n = obj["n"]
    for k, u in enumerate(obj["opens"]):
        for x in u:
            if not 0 <= x < n:
                raise SchemaError(path, f"{pointer}/opens/{k}", f"point {x} outside 0..{n - 1}")
    try:
        return FiniteSpace.from_points(n, obj["opens"])
    except ValueError as e:
        raise SchemaError(path, f"{pointer}/opens", str(e)) from None


# -- models -----------------------------------------------------------------------------

def model_to_json(m: Model) -> dict:
    val = m.valuation
    return {
        "space": space_to_json(m.space),
        "vars": {k: set_to_json(val.vars[k]) for k in sorted(val.vars)},
        "disjunctions": sorted(
            ({"formula": to_str(f), "value": set_to_json(s)} for f, s in val.disjunctions.items()),
            key=lambda e: e["formula"],
        ),
    }


def model_from_json(obj, path=None) -> Model:
    _validate(obj, MODEL_SCHEMA, path)
    space = space_from_json(obj["space"], path, "/space")
    vs = {name: set_from_json(space, s, path, f"/vars/{name}") for name, s in obj["vars"].items()}
    table: Dict[Formula, object] = {}
    for k, e in enumerate(obj.get("disjunctions", [])):
        f = _formula(e["formula"], path, f"/disjunctions/{k}/formula")
        if not isinstance(f, Or):
            raise SchemaError(path, f"/disjunctions/{k}/formula", f"{e['formula']} is not a disjunction")
        table[f] = set_from_json(space, e["value"], path, f"/disjunctions/{k}/value")
    try:
        m = make_model(space, vs, table)
    except ValueError as e:
        raise InvariantError(str(e)) from None
    # entries are only checked lazily during evaluation; force them here
    for f in table:
        try:
            eval_formula(m, f)
        except OracleConstraintViolated as e:
            raise InvariantError(
                f"disjunction entry for {to_str(e.formula)} does not contain the union of its operands",
                e.formula) from None
        except KeyError as e:
            raise InvariantError(f"disjunction {to_str(f)} uses an unassigned variable: {e}", f) from None
    return m


# -- derivations ----------------------------------------------------------------------

def _just_to_json(j) -> dict:
    if isinstance(j, Hyp):
        return {"kind": "hyp"}
    if isinstance(j, Axiom):
        return {"kind": "axiom", "id": j.id}
    if isinstance(j, MP):
        return {"kind": "mp", "i": j.i, "j": j.j}
    if isinstance(j, Rule2):
        return {"kind": "rule2", "i": j.i}
    return {"kind": "defn", "i": j.i, "witness": to_str(j.witness)}


def derivation_to_json(d: Derivation) -> dict:
    return {
        "hypotheses": [to_str(h) for h in d.hypotheses],
        "lines": [{"formula": to_str(l.formula), "just": _just_to_json(l.just)} for l in d.lines],
    }


def derivation_from_json(obj, path=None) -> Derivation:
    _validate(obj, PROOF_SCHEMA, path)
    hyps = [_formula(h, path, f"/hypotheses/{k}") for k, h in enumerate(obj.get("hypotheses", []))]
    lines = []
    for k, e in enumerate(obj["lines"]):
        f = _formula(e["formula"], path, f"/lines/{k}/formula")
        j = e["just"]
        for ref in ("i", "j"):
            if ref in j and not 0 <= j[ref] < k:
                raise SchemaError(path, f"/lines/{k}/just/{ref}",
                                  f"line {k} refers to line {j[ref]}, which is not an earlier line")
        kind = j["kind"]
        if kind == "hyp":
            just = Hyp()
        elif kind == "axiom":
            just = Axiom(j["id"])
        elif kind == "mp":
            just = MP(j["i"], j["j"])
        elif kind == "rule2":
            just = Rule2(j["i"])
        else:
            just = Defn(j["i"], _formula(j["witness"], path, f"/lines/{k}/just/witness"))
        lines.append(Line(f, just))
    return Derivation(tuple(hyps), tuple(lines))


# -- reports ----------------------------------------------------------------------------

def _budget_to_json(b: Optional[SearchBudget]):
    if b is None:
        return None
    return {"max_points": b.max_points, "max_oracle_candidates": b.max_oracle_candidates,
            "time_limit": b.time_limit, "max_models": b.max_models}


def report_to_json(r: CounterexampleReport) -> dict:
    out = {
        "kind": r.kind,
        "gamma": [to_str(g) for g in r.gamma],
        "target": to_str(r.target),
        "model": model_to_json(r.model),
        "values": {to_str(f): set_to_json(s) for f, s in r.values.items()},
        "budget": _budget_to_json(r.budget),
    }
    if r.validity_model is not None and r.validity_model != r.model:
        out["validity_model"] = model_to_json(r.validity_model)
    return out


def report_from_json(obj, path=None) -> CounterexampleReport:
    m = model_from_json(obj["model"], path)
    vm = model_from_json(obj["validity_model"], path) if "validity_model" in obj else m
    values = {parse(f): set_from_json(m.space, s, path, f"/values/{f}") for f, s in obj["values"].items()}
    b = obj.get("budget")
    return CounterexampleReport(
        obj["kind"], tuple(parse(g) for g in obj["gamma"]), parse(obj["target"]),
        m, values, vm, SearchBudget(**b) if b else None)


# -- files --------------------------------------------------------------------------------

def _read(path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise IoError(f"cannot read {path}: {e.strerror or e}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(str(path), "", f"invalid JSON: {e}") from None


def load_model(path) -> Model:
    return model_from_json(_read(path), str(path))


def load_proof(path) -> Derivation:
    return derivation_from_json(_read(path), str(path))


def dumps(obj) -> str:
    """Deterministic JSON text (sorted keys, fixed separators)."""
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, indent=2)
