"""Terms and formulas of first-order logic with negation as a primitive node.

Formulas are immutable and hashable. Binary and quantifier nodes carry an
optional provenance ``tag`` which never takes part in equality or hashing, so
two formulas that differ only in tags are the same formula.
"""

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import (
    ClassVar,
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    Mapping,
    Optional,
    Set,
    Tuple,
)

Position = Tuple[int, ...]


class Term:
    __slots__ = ()


@dataclass(frozen=True)
class Var(Term):
    name: str


@dataclass(frozen=True)
class App(Term):
    """Function application; constants are applications with no arguments."""

    fn: str
    args: Tuple[Term, ...] = ()


class Formula:
    __slots__ = ()

    def __str__(self) -> str:
        from negtrans.parser import render

        return render(self)


class Symbol(Enum):
    """Connectives and quantifiers the simplification calculus acts on."""

    AND = "and"
    OR = "or"
    IMP = "imp"
    FORALL = "forall"
    EXISTS = "exists"

    @property
    def is_quantifier(self) -> bool:
        return self in (Symbol.FORALL, Symbol.EXISTS)

    @property
    def node(self) -> type:
        return _NODE_TYPES[self]

    @property
    def glyph(self) -> str:
        return _GLYPHS[self]


@dataclass(frozen=True)
class Atom(Formula):
    pred: str
    args: Tuple[Term, ...] = ()


@dataclass(frozen=True)
class Bot(Formula):
    pass


@dataclass(frozen=True)
class Top(Formula):
    pass


BOT = Bot()
TOP = Top()


@dataclass(frozen=True)
class Meta(Formula):
    """Schema metavariable, the ``A``/``B`` holes of rules and clause templates."""

    name: str


@dataclass(frozen=True, eq=False)
class Neg(Formula):
    body: Formula
    _hash: int = field(init=False, repr=False, default=0)

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash(("Neg", self.body)))

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return (
            type(other) is Neg
            and other._hash == self._hash
            and other.body == self.body
        )


@dataclass(frozen=True, eq=False)
class Binary(Formula):
    left: Formula
    right: Formula
    tag: Optional[int] = field(default=None, repr=False)
    _hash: int = field(init=False, repr=False, default=0)

    symbol: ClassVar[Symbol]

    def __post_init__(self):
        object.__setattr__(
            self, "_hash", hash((type(self).__name__, self.left, self.right))
        )

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return (
            type(other) is type(self)
            and other._hash == self._hash
            and other.left == self.left
            and other.right == self.right
        )


class And(Binary):
    symbol = Symbol.AND


class Or(Binary):
    symbol = Symbol.OR


class Imp(Binary):
    symbol = Symbol.IMP


@dataclass(frozen=True, eq=False)
class Quantifier(Formula):
    var: str
    body: Formula
    tag: Optional[int] = field(default=None, repr=False)
    _hash: int = field(init=False, repr=False, default=0)

    symbol: ClassVar[Symbol]

    def __post_init__(self):
        object.__setattr__(
            self, "_hash", hash((type(self).__name__, self.var, self.body))
        )

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return (
            type(other) is type(self)
            and other._hash == self._hash
            and other.var == self.var
            and other.body == self.body
        )


class Forall(Quantifier):
    symbol = Symbol.FORALL


class Exists(Quantifier):
    symbol = Symbol.EXISTS


_NODE_TYPES = {
    Symbol.AND: And,
    Symbol.OR: Or,
    Symbol.IMP: Imp,
    Symbol.FORALL: Forall,
    Symbol.EXISTS: Exists,
}
_GLYPHS = {
    Symbol.AND: "&",
    Symbol.OR: "|",
    Symbol.IMP: "->",
    Symbol.FORALL: "forall",
    Symbol.EXISTS: "exists",
}


@dataclass(frozen=True)
class ConnectiveCounts:
    and_: int = 0
    or_: int = 0
    imp: int = 0
    forall: int = 0
    exists: int = 0

    def __getitem__(self, symbol: Symbol) -> int:
        return getattr(self, _COUNT_FIELDS[symbol])

    @property
    def total(self) -> int:
        return self.and_ + self.or_ + self.imp + self.forall + self.exists

    def as_dict(self) -> Dict[str, int]:
        return {symbol.value: self[symbol] for symbol in Symbol}


_COUNT_FIELDS = {
    Symbol.AND: "and_",
    Symbol.OR: "or_",
    Symbol.IMP: "imp",
    Symbol.FORALL: "forall",
    Symbol.EXISTS: "exists",
}


# Construction helpers


def neg(f: Formula, times: int = 1) -> Formula:
    for _ in range(times):
        f = Neg(f)
    return f


def dneg(f: Formula) -> Formula:
    return Neg(Neg(f))


def iff(a: Formula, b: Formula) -> Formula:
    return And(Imp(a, b), Imp(b, a))


def atom(name: str, *args: str) -> Atom:
    """Atom over variables, e.g. ``atom("P", "x")`` for P(x)."""
    return Atom(name, tuple(Var(a) for a in args))


# Traversal


def children(f: Formula) -> Tuple[Formula, ...]:
    if isinstance(f, Binary):
        return (f.left, f.right)
    if isinstance(f, (Neg, Quantifier)):
        return (f.body,)
    return ()


def with_children(f: Formula, kids: Tuple[Formula, ...]) -> Formula:
    if isinstance(f, Binary):
        if kids[0] is f.left and kids[1] is f.right:
            return f
        return replace(f, left=kids[0], right=kids[1])
    if isinstance(f, Neg):
        return f if kids[0] is f.body else Neg(kids[0])
    if isinstance(f, Quantifier):
        return f if kids[0] is f.body else replace(f, body=kids[0])
    return f


def subformula_at(f: Formula, pos: Position) -> Formula:
    for index in pos:
        f = children(f)[index]
    return f


def replace_at(f: Formula, pos: Position, new: Formula) -> Formula:
    if not pos:
        return new
    kids = list(children(f))
    kids[pos[0]] = replace_at(kids[pos[0]], pos[1:], new)
    return with_children(f, tuple(kids))


def positions(f: Formula, order: str = "pre") -> Iterator[Position]:
    """All positions of ``f`` in pre-order or post-order, children left to right."""

    def walk(node: Formula, pos: Position) -> Iterator[Position]:
        if order == "pre":
            yield pos
        for index, kid in enumerate(children(node)):
            yield from walk(kid, pos + (index,))
        if order == "post":
            yield pos

    return walk(f, ())


def subformulas(f: Formula) -> Iterator[Formula]:
    yield f
    for kid in children(f):
        yield from subformulas(kid)


# Counting


def count_connectives(f: Formula) -> ConnectiveCounts:
    totals = dict.fromkeys(_COUNT_FIELDS.values(), 0)
    for node in subformulas(f):
        if isinstance(node, (Binary, Quantifier)):
            totals[_COUNT_FIELDS[node.symbol]] += 1
    return ConnectiveCounts(**totals)


def negation_count(f: Formula) -> int:
    return sum(1 for node in subformulas(f) if isinstance(node, Neg))


def is_propositional(f: Formula) -> bool:
    return not any(isinstance(node, Quantifier) for node in subformulas(f))


def contains_neg(f: Formula) -> bool:
    return any(isinstance(node, Neg) for node in subformulas(f))


# Negation bridge


def expand_neg(f: Formula) -> Formula:
    """Replace every ``Neg(X)`` by ``Imp(X, Bot)``."""
    if isinstance(f, Neg):
        return Imp(expand_neg(f.body), BOT)
    kids = children(f)
    if not kids:
        return f
    return with_children(f, tuple(expand_neg(k) for k in kids))


def replace_bot(f: Formula, replacement: Formula) -> Formula:
    if isinstance(f, Bot):
        return replacement
    kids = children(f)
    if not kids:
        return f
    return with_children(f, tuple(replace_bot(k, replacement) for k in kids))


# Variables and terms


def term_vars(t: Term) -> FrozenSet[str]:
    if isinstance(t, Var):
        return frozenset((t.name,))
    return frozenset().union(*(term_vars(a) for a in t.args))


def free_vars(f: Formula) -> FrozenSet[str]:
    if isinstance(f, Atom):
        return frozenset().union(*(term_vars(a) for a in f.args))
    if isinstance(f, Quantifier):
        return free_vars(f.body) - {f.var}
    return frozenset().union(*(free_vars(k) for k in children(f)))


def all_var_names(f: Formula) -> Set[str]:
    """Free and bound variable names occurring anywhere in ``f``."""
    names: Set[str] = set()
    for node in subformulas(f):
        if isinstance(node, Atom):
            for arg in node.args:
                names |= term_vars(arg)
        elif isinstance(node, Quantifier):
            names.add(node.var)
    return names


def fresh_name(avoid: Iterable[str], base: str = "a") -> str:
    taken = set(avoid)
    index = 0
    while f"{base}{index}" in taken:
        index += 1
    return f"{base}{index}"


def substitute_term(t: Term, var: str, value: Term) -> Term:
    if isinstance(t, Var):
        return value if t.name == var else t
    return App(t.fn, tuple(substitute_term(a, var, value) for a in t.args))


def substitute(f: Formula, var: str, value: Term) -> Formula:
    """Capture-avoiding substitution of ``value`` for the free variable ``var``."""
    if isinstance(f, Atom):
        if not f.args:
            return f
        return Atom(f.pred, tuple(substitute_term(a, var, value) for a in f.args))
    if isinstance(f, Quantifier):
        if f.var == var or var not in free_vars(f.body):
            return f
        value_vars = term_vars(value)
        if f.var in value_vars:
            renamed = fresh_name(
                all_var_names(f.body) | value_vars | {var}, base=f.var
            )
            body = substitute(f.body, f.var, Var(renamed))
            return replace(f, var=renamed, body=substitute(body, var, value))
        return replace(f, body=substitute(f.body, var, value))
    kids = children(f)
    if not kids:
        return f
    return with_children(f, tuple(substitute(k, var, value) for k in kids))


def rename_bound(f: Formula, old: str, new: str) -> Formula:
    """Rename the binder ``old`` to ``new`` wherever it occurs as a binder."""
    if isinstance(f, Quantifier) and f.var == old:
        return replace(f, var=new, body=substitute(f.body, old, Var(new)))
    kids = children(f)
    if not kids:
        return f
    return with_children(f, tuple(rename_bound(k, old, new) for k in kids))


# Signature


def predicate_arities(f: Formula) -> Dict[str, Set[int]]:
    arities: Dict[str, Set[int]] = {}
    for node in subformulas(f):
        if isinstance(node, Atom):
            arities.setdefault(node.pred, set()).add(len(node.args))
    return arities


def function_arities(f: Formula) -> Dict[str, Set[int]]:
    arities: Dict[str, Set[int]] = {}

    def visit(t: Term) -> None:
        if isinstance(t, App):
            arities.setdefault(t.fn, set()).add(len(t.args))
            for arg in t.args:
                visit(arg)

    for node in subformulas(f):
        if isinstance(node, Atom):
            for arg in node.args:
                visit(arg)
    return arities


def closed_terms(f: Formula) -> Set[Term]:
    """Ground terms occurring as arguments of atoms."""
    found: Set[Term] = set()

    def visit(t: Term) -> None:
        if isinstance(t, App):
            if not term_vars(t):
                found.add(t)
            for arg in t.args:
                visit(arg)

    for node in subformulas(f):
        if isinstance(node, Atom):
            for arg in node.args:
                visit(arg)
    return found


# Schemas


def fill(
    schema: Formula,
    holes: Mapping[str, Formula],
    var: Optional[str] = None,
    tag: Optional[int] = None,
    placeholder: str = "x",
) -> Formula:
    """Instantiate metavariables of ``schema``.

    ``var`` replaces the bound placeholder variable, and ``tag`` is written on
    every binary and quantifier node the schema itself contributes.
    """
    if isinstance(schema, Meta):
        return holes[schema.name]
    if isinstance(schema, Atom):
        if var is None or not schema.args:
            return schema
        return substitute(schema, placeholder, Var(var))
    if isinstance(schema, Neg):
        return Neg(fill(schema.body, holes, var, tag, placeholder))
    if isinstance(schema, Binary):
        return type(schema)(
            fill(schema.left, holes, var, tag, placeholder),
            fill(schema.right, holes, var, tag, placeholder),
            tag,
        )
    if isinstance(schema, Quantifier):
        bound = var if (var is not None and schema.var == placeholder) else schema.var
        return type(schema)(bound, fill(schema.body, holes, var, tag, placeholder), tag)
    return schema


def metas(f: Formula) -> Set[str]:
    return {node.name for node in subformulas(f) if isinstance(node, Meta)}


def untagged(f: Formula) -> Formula:
    if isinstance(f, Binary):
        return type(f)(untagged(f.left), untagged(f.right))
    if isinstance(f, Quantifier):
        return type(f)(f.var, untagged(f.body))
    if isinstance(f, Neg):
        return Neg(untagged(f.body))
    return f
