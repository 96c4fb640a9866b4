"""Formulas of vD: AST, parser, printer, schema matching and the ~/bot macros.

Surface syntax (ASCII)::

    p & q      conjunction          p | q      disjunction
    p -> q     implication          !p         paraconsistent negation
    @p         consistency          ~p         classical negation
    bot(w)     bottom with witness w, sugar for  w & (!w & @w)

Precedence, tightest first: unary, ``&``, ``|``, ``->``. ``->`` associates to
the right, ``&`` and ``|`` to the left.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional

__all__ = [
    "Formula", "Var", "And", "Or", "Imp", "Neg", "Circ", "ClassNeg",
    "FormulaSyntaxError", "Schema", "SCHEMAS",
    "parse", "to_str", "bot", "is_bot", "variables", "subformulas", "size",
    "substitute", "match_schema", "expand_defs", "fold_defs",
]


class Formula:
    """Base class of every AST node. Nodes are immutable and hashable."""

    __slots__ = ()

    def __and__(self, other: Formula) -> And:
        return And(self, other)

    def __or__(self, other: Formula) -> Or:
        return Or(self, other)

    def __rshift__(self, other: Formula) -> Imp:
        return Imp(self, other)

    def __invert__(self) -> ClassNeg:
        return ClassNeg(self)

    def __str__(self) -> str:
        return to_str(self)

    @property
    def children(self) -> tuple:
        return ()


def _fix_hash(obj, *parts) -> None:
    object.__setattr__(obj, "_hash", hash((type(obj).__name__,) + parts))


@dataclass(frozen=True, eq=True, repr=False)
class Var(Formula):
    name: str
    _hash: int = field(init=False, compare=False, default=0)

    def __post_init__(self):
        _fix_hash(self, self.name)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Var({self.name!r})"


@dataclass(frozen=True, eq=True, repr=False)
class _Unary(Formula):
    arg: Formula
    _hash: int = field(init=False, compare=False, default=0)

    def __post_init__(self):
        _fix_hash(self, self.arg._hash)

    def __hash__(self):
        return self._hash

    @property
    def children(self) -> tuple:
        return (self.arg,)

    def __repr__(self):
        return f"{type(self).__name__}({self.arg!r})"


@dataclass(frozen=True, eq=True, repr=False)
class _Binary(Formula):
    left: Formula
    right: Formula
    _hash: int = field(init=False, compare=False, default=0)

    def __post_init__(self):
        _fix_hash(self, self.left._hash, self.right._hash)

    def __hash__(self):
        return self._hash

    @property
    def children(self) -> tuple:
        return (self.left, self.right)

    def __repr__(self):
        return f"{type(self).__name__}({self.left!r}, {self.right!r})"


class And(_Binary):
    pass


class Or(_Binary):
    pass


class Imp(_Binary):
    pass


class Neg(_Unary):
    pass


class Circ(_Unary):
    pass


class ClassNeg(_Unary):
    pass


# subclasses inherit the dataclass __eq__, which compares classes first,
# so And(p, q) != Or(p, q)


def bot(witness: Formula) -> Formula:
    """The bottom particle ``w & (!w & @w)``."""
    return And(witness, And(Neg(witness), Circ(witness)))


def is_bot(f: Formula) -> Optional[Formula]:
    """Return the witness if `f` has the shape ``w & (!w & @w)``."""
    if type(f) is And and type(f.right) is And:
        w = f.left
        n, c = f.right.left, f.right.right
        if type(n) is Neg and type(c) is Circ and n.arg == w and c.arg == w:
            return w
    return None


# -- parsing -----------------------------------------------------------------

class FormulaSyntaxError(SyntaxError):
    """Raised by :func:`parse`; carries the offset and the expected tokens."""

    def __init__(self, message: str, text: str, offset: int, expected):
        self.expected = frozenset(expected)
        self.pos = offset
        super().__init__(
            f"{message} at offset {offset} (expected one of: "
            f"{', '.join(sorted(self.expected))})"
        )
        self.text = text
        self.offset = offset


_UNICODE = {"∧": "&", "∨": "|", "→": "->", "⟶": "->", "¬": "!", "∼": "~", "∘": "@"}

_TOKEN = re.compile(r"\s*(?:(->)|([&|!~@()])|([a-z][a-zA-Z0-9_]*))")


def _tokenize(text: str) -> List[tuple]:
    tokens = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        ch = text[pos]
        if ch in _UNICODE:
            tokens.append((_UNICODE[ch], None, pos))
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise FormulaSyntaxError(
                f"unexpected character {ch!r}", text, pos,
                {"identifier", "(", "!", "~", "@", "bot"},
            )
        start = m.start(m.lastindex)
        if m.group(3) is not None:
            tokens.append(("ident", m.group(3), start))
        else:
            tokens.append((m.group(m.lastindex), None, start))
        pos = m.end()
    tokens.append(("eof", None, n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple:
        return self.tokens[self.i]

    def error(self, expected) -> FormulaSyntaxError:
        kind, value, pos = self.peek()
        found = "end of input" if kind == "eof" else repr(value or kind)
        return FormulaSyntaxError(f"unexpected {found}", self.text, pos, expected)

    def expect(self, kind: str) -> tuple:
        tok = self.peek()
        if tok[0] != kind:
            raise self.error({kind})
        self.i += 1
        return tok

    def formula(self) -> Formula:
        left = self.disjunction()
        if self.peek()[0] == "->":
            self.i += 1
            return Imp(left, self.formula())
        return left

    def disjunction(self) -> Formula:
        f = self.conjunction()
        while self.peek()[0] == "|":
            self.i += 1
            f = Or(f, self.conjunction())
        return f

    def conjunction(self) -> Formula:
        f = self.unary()
        while self.peek()[0] == "&":
            self.i += 1
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        kind = self.peek()[0]
        if kind in ("!", "~", "@"):
            self.i += 1
            arg = self.unary()
            return {"!": Neg, "~": ClassNeg, "@": Circ}[kind](arg)
        return self.atom()

    def atom(self) -> Formula:
        kind, value, _ = self.peek()
        if kind == "ident":
            self.i += 1
            if value == "bot":
                self.expect("(")
                w = self.formula()
                self.expect(")")
                return bot(w)
            return Var(value)
        if kind == "(":
            self.i += 1
            f = self.formula()
            self.expect(")")
            return f
        raise self.error({"identifier", "bot", "(", "!", "~", "@"})


def parse(text: str) -> Formula:
    """Parse the ASCII surface syntax into a :class:`Formula`.

    >>> parse("p -> (q -> p)")
    Imp(Var('p'), Imp(Var('q'), Var('p')))
    """
    p = _Parser(text)
    f = p.formula()
    if p.peek()[0] != "eof":
        raise p.error({"->", "|", "&", "end of input"})
    return f


# -- printing ----------------------------------------------------------------

_PREC = {Imp: 1, Or: 2, And: 3}
_SYM = {Imp: "->", Or: "|", And: "&", Neg: "!", Circ: "@", ClassNeg: "~"}


def _prec(f: Formula) -> int:
    if is_bot(f) is not None:
        return 4
    return _PREC.get(type(f), 4)


def to_str(f: Formula) -> str:
    """Print with the fewest parentheses that still round-trip through parse."""
    t = type(f)
    if t is Var:
        return f.name
    w = is_bot(f)
    if w is not None:
        return f"bot({to_str(w)})"
    if t in (Neg, Circ, ClassNeg):
        inner = to_str(f.arg)
        if _prec(f.arg) < 4:
            inner = f"({inner})"
        return _SYM[t] + inner
    p = _PREC[t]
    left, right = to_str(f.left), to_str(f.right)
    lp, rp = _prec(f.left), _prec(f.right)
    if t is Imp:
        # right associative
        if lp <= p:
            left = f"({left})"
        if rp < p:
            right = f"({right})"
    else:
        if lp < p:
            left = f"({left})"
        if rp <= p:
            right = f"({right})"
    return f"{left} {_SYM[t]} {right}"


# -- structural utilities ----------------------------------------------------

def _postorder(f: Formula) -> Iterator[Formula]:
    stack = [(f, False)]
    while stack:
        node, done = stack.pop()
        if done:
            yield node
            continue
        stack.append((node, True))
        for c in reversed(node.children):
            stack.append((c, False))


def subformulas(f: Formula) -> List[Formula]:
    """Distinct subformulas of `f`, children before parents."""
    seen = {}
    for node in _postorder(f):
        if node not in seen:
            seen[node] = None
    return list(seen)


def variables(f: Formula) -> List[str]:
    """Variable names of `f`, sorted."""
    return sorted({g.name for g in subformulas(f) if type(g) is Var})


def size(f: Formula) -> int:
    return sum(1 for _ in _postorder(f))


def _rebuild(f: Formula, kids: list) -> Formula:
    if len(kids) == 1:
        return f if kids[0] is f.arg else type(f)(kids[0])
    if kids[0] is f.left and kids[1] is f.right:
        return f
    return type(f)(kids[0], kids[1])


def substitute(f: Formula, binding: Dict[str, Formula]) -> Formula:
    """Replace variables named in `binding` (simultaneously)."""
    memo: Dict[Formula, Formula] = {}
    for node in _postorder(f):
        if node in memo:
            continue
        if type(node) is Var:
            memo[node] = binding.get(node.name, node)
        else:
            memo[node] = _rebuild(node, [memo[c] for c in node.children])
    return memo[f]


# -- axiom schemas -----------------------------------------------------------

@dataclass(frozen=True)
class Schema:
    """An axiom schema; variables in `pattern` are metavariables."""

    id: int
    pattern: Formula
    metavars: tuple

    def instantiate(self, **binding: Formula) -> Formula:
        return substitute(self.pattern, binding)


# metavariables are spelled a, b, c (for alpha, beta, gamma)
_SCHEMA_TEXT = {
    1: "a -> (b -> a)",
    2: "(a -> (b -> c)) -> ((a -> b) -> (a -> c))",
    3: "a -> (b -> (a & b))",
    4: "(a & b) -> a",
    5: "(a & b) -> b",
    6: "a -> (a | b)",
    7: "b -> (a | b)",
    8: "(a -> b) | a",
    9: "a | !a",
    10: "(a -> c) -> ((!a -> c) -> ((a | !a) -> c))",
    11: "((a -> b) -> c) -> ((a -> c) -> (((a -> b) | a) -> c))",
    12: "@a -> (a -> (!a -> b))",
    13: "@a | (a & !a)",
    14: "(@a -> c) -> (((a & !a) -> c) -> ((@a | (a & !a)) -> c))",
    15: "~!a -> ~!~!a",
    16: "~!~!a -> ~!a",
    17: "~!(a & b) -> (~!a & ~!b)",
    18: "(~!a & ~!b) -> ~!(a & b)",
}

SCHEMAS: Dict[int, Schema] = {}
for _k, _txt in _SCHEMA_TEXT.items():
    _pat = parse(_txt)
    SCHEMAS[_k] = Schema(_k, _pat, tuple(variables(_pat)))


def match_schema(f: Formula, schema) -> Optional[Dict[str, Formula]]:
    """Match `f` against an axiom schema (or its id).

    Returns the metavariable binding, or None if `f` is not an instance.
    The binding is unique when it exists.
    """
    if isinstance(schema, int):
        schema = SCHEMAS[schema]
    binding: Dict[str, Formula] = {}
    stack = [(schema.pattern, f)]
    while stack:
        pat, g = stack.pop()
        if type(pat) is Var:
            bound = binding.get(pat.name)
            if bound is None:
                binding[pat.name] = g
            elif bound != g:
                return None
            continue
        if type(pat) is not type(g):
            return None
        stack.extend(zip(pat.children, g.children))
    return binding


# -- definitional macros -----------------------------------------------------

def expand_defs(f: Formula, witness: Formula) -> Formula:
    """Replace every ``~g`` by ``g -> bot(witness)``, bottom up.

    The witness itself must be free of ``~`` (otherwise the expansion would
    be circular), so the result contains no ClassNeg node.
    """
    if any(type(g) is ClassNeg for g in _postorder(witness)):
        raise ValueError(f"witness {to_str(witness)} must not contain ~")
    w_bot = None
    memo: Dict[Formula, Formula] = {}
    for node in _postorder(f):
        if node in memo:
            continue
        kids = [memo[c] for c in node.children]
        if type(node) is ClassNeg:
            if w_bot is None:
                w_bot = bot(witness)
            memo[node] = Imp(kids[0], w_bot)
        else:
            memo[node] = _rebuild(node, kids) if kids else node
    return memo[f]


def fold_defs(f: Formula, witness: Optional[Formula] = None) -> Formula:
    """Inverse direction of :func:`expand_defs`: ``g -> bot(w)`` becomes ``~g``.

    With a witness only that witness is folded; with None every bottom
    particle is. Folding is bottom-up and a congruence, so two formulas are
    equal modulo the definition of ``~`` iff their folds are identical.
    """
    memo: Dict[Formula, Formula] = {}
    for node in _postorder(f):
        if node in memo:
            continue
        kids = [memo[c] for c in node.children]
        if type(node) is Imp:
            w = is_bot(kids[1])
            if w is not None and (witness is None or w == witness):
                memo[node] = ClassNeg(kids[0])
                continue
        memo[node] = _rebuild(node, kids) if kids else node
    return memo[f]
