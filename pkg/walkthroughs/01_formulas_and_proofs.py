"""
Formulas and derivations
========================

Parse formulas, match axiom schemas, check derivations and turn a derivation
from hypotheses into one of an implication.
"""

# %%
from vdlogic import SCHEMAS, check, corpus, deduction_transform, expand_defs, match_schema, parse

f = parse("@p -> (p -> (!p -> q))")
print(f)                     # printed with minimal parentheses
print(match_schema(f, 12))   # binding for the gentle explosion schema
print(match_schema(f, 1))    # not an instance: None

# %%
# ~ is a node of its own; bot(w) is sugar for w & (!w & @w)
g = parse("~~p")
print(expand_defs(g, parse("q")))

# %%
# all eighteen schemas
for k, s in SCHEMAS.items():
    print(f"{k:2d}  {s.pattern}")

# %%
# the bundled derivations and their verdicts
for name, d in corpus().items():
    r = check(d)
    where = "" if r.first_error is None else f" at line {r.first_error[0]}: {r.first_error[1]}"
    print(f"{name:18s} {r.verdict}{where}")

# %%
# {p, ~p} |- q, discharged twice
d = corpus()["thm2.7.i"]
for line, flag in zip(d.lines, check(d).theorem_flags):
    print(f"  {'T' if flag else ' '} {line.formula}")

closed = deduction_transform(deduction_transform(d, parse("~p")), parse("p"))
print(closed.conclusion, len(closed.lines), "lines,", check(closed).verdict)
