"""
Replacement fails
=================

p & q and q & p derive each other, yet (p & q) | r and (q & p) | r can get
different values, because a disjunction's value depends on the formula, not
only on the values of its parts.
"""

# %%
from vdlogic import check, corpus, eval_formula, parse, replacement_failure_witness, replay
from vdlogic.jsonio import dumps, report_to_json

for name in ("and-comm-lr", "and-comm-rl"):
    d = corpus()[name]
    print(name, [str(h) for h in d.hypotheses], "|-", d.conclusion, check(d).verdict)

# %%
w = replacement_failure_witness()
m = w.model
for text in ("p & q", "q & p", "(p & q) | r", "(q & p) | r"):
    print(f"{text:14s} {eval_formula(m, parse(text))}")
print("replays:", replay(w))

# %%
print(dumps(report_to_json(w)))
