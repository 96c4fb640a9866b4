"""
Topological models
==================

Finite spaces as bitsets, exact interval sets on the real line, and
evaluation with a table of disjunction values.
"""

# %%
from vdlogic import eval_all, eval_formula, is_true, make_model, parse
from vdlogic.topo import REAL_LINE, FiniteSpace, IntervalSet, closure, enumerate_topologies, interior

for n in range(5):
    print(n, sum(1 for _ in enumerate_topologies(n)))

# %%
s = FiniteSpace.from_points(3, [[], [0], [0, 1], [0, 1, 2]])
a = s.subset([1])
print(interior(a), closure(s.subset([0, 2])))

m = make_model(s, {"p": [1]})
for f, v in eval_all(m, parse("(p & !p) | @p")).items():
    print(f"{str(f):20s} {v}")

# %%
# negation is the closure of the complement, so p and !p can overlap on a boundary
r = make_model(REAL_LINE, {"p": IntervalSet.closed_open(0, 1)})
print(eval_formula(r, parse("!p")))
print(eval_formula(r, parse("p & !p")))
print(eval_formula(r, parse("@p")))

# %%
# disjunctions only have a lower bound; table entries may go above it
t = make_model(FiniteSpace.discrete(2), {"p": [0], "q": [0]}, {parse("p | q"): [0, 1]})
print(eval_formula(t, parse("p | q")), eval_formula(t, parse("q | p")))
print(is_true(t, parse("p | q")), is_true(t, parse("p | !p")))
