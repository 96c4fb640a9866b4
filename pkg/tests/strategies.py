"""Hypothesis strategies shared by the test modules."""

from fractions import Fraction

from hypothesis import strategies as st

from vdlogic.formula import And, Circ, ClassNeg, Imp, Neg, Or, Var, bot
from vdlogic.topo import Interval, IntervalSet, enumerate_topologies

NAMES = ("p", "q", "r")

variables = st.sampled_from(NAMES).map(Var)


def _extend(children):
    return st.one_of(
        st.builds(Neg, children),
        st.builds(Circ, children),
        st.builds(ClassNeg, children),
        st.builds(And, children, children),
        st.builds(Or, children, children),
        st.builds(Imp, children, children),
    )


formulas = st.recursive(variables, _extend, max_leaves=12)

# no ~ anywhere, so it can serve as a bottom witness
tilde_free = st.recursive(
    variables,
    lambda c: st.one_of(st.builds(Neg, c), st.builds(Circ, c), st.builds(And, c, c),
                        st.builds(Or, c, c), st.builds(Imp, c, c)),
    max_leaves=4,
)

formulas_with_bot = st.recursive(
    variables, lambda c: st.one_of(_extend(c), st.builds(bot, tilde_free)), max_leaves=10)

SPACES = [s for n in range(1, 4) for s in enumerate_topologies(n)]
spaces = st.sampled_from(SPACES)


@st.composite
def finite_models(draw):
    from vdlogic.semantics import make_model

    space = draw(spaces)
    vs = {name: draw(st.integers(0, space.full)) for name in NAMES}
    return make_model(space, vs)


_endpoint = st.integers(-12, 12).map(lambda k: Fraction(k, 2))


@st.composite
def intervals(draw):
    a, b = sorted((draw(_endpoint), draw(_endpoint)))
    lo_open, hi_open = draw(st.booleans()), draw(st.booleans())
    if draw(st.integers(0, 7)) == 0:
        a = "-inf"
    if draw(st.integers(0, 7)) == 0:
        b = "inf"
    if a == b and (lo_open or hi_open):
        lo_open = hi_open = False
    return Interval(a, b, lo_open, hi_open)


interval_sets = st.lists(intervals(), max_size=4).map(IntervalSet)
