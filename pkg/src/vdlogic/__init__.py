"""The paraconsistent logic vD: proof checking, topological models, countermodels."""

from .corpus import EXPECTED, corpus
from .formula import (
    SCHEMAS, And, Circ, ClassNeg, Formula, FormulaSyntaxError, Imp, Neg, Or, Schema, Var,
    bot, expand_defs, fold_defs, match_schema, parse, subformulas, substitute, to_str,
    variables,
)
from .hilbert import (
    MP, Axiom, CheckReport, Defn, DeductionError, Derivation, Hyp, Line, Reason, Rule2,
    check, deduction_transform,
)
from .search import (
    BudgetExceeded, CounterexampleReport, FuzzReport, SearchBudget, fuzz_soundness,
    lfi_witnesses, refute_entailment, refute_validity, replacement_failure_witness, replay,
)
from .semantics import (
    Model, OracleConstraintViolated, UnboundVariable, Valuation, consequence_in_model,
    eval_all, eval_formula, implication_test, is_true, macro_consistency, make_model,
    random_model,
)

__version__ = "0.1.0"
