"""
Countermodels
=============

Contradictions alone do not explode; adding consistency of the
contradictory formula does. The real-line witnesses show the first part,
bounded finite search finds small countermodels of its own.
"""

# %%
from vdlogic import SearchBudget, lfi_witnesses, refute_entailment, refute_validity, replay

for w in lfi_witnesses():
    print(", ".join(map(str, w.gamma)), "|/-", w.target)
    for f, v in w.values.items():
        print(f"    {str(f):18s} {v}")
    print("    replays:", replay(w))

# %%
for gamma in (["p", "!p"], ["@p", "p"], ["@p", "!p"], ["@p", "p", "!p"]):
    r = refute_entailment(gamma, "q", SearchBudget(max_points=3))
    if r is None:
        print(gamma, "no countermodel up to 3 points")
    else:
        print(gamma, r.model.space, {k: str(v) for k, v in r.model.valuation.vars.items()})

# %%
# absence is never a proof of validity; it only means the budget was searched
print(refute_validity("p | !p", SearchBudget(max_points=3)))
r = refute_validity("p -> !!p")
print(r.model.space, {k: str(v) for k, v in r.model.valuation.vars.items()})
