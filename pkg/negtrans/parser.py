"""Reading and printing formulas in the ASCII grammar.

``~`` binds tightest, then ``&``, ``|`` and ``->``; all binary operators
associate to the right. A quantifier body extends as far right as possible,
so quantifiers may only occur unparenthesized at the right end of a formula.
"""

import logging
from dataclasses import replace
from typing import FrozenSet, Iterable, Tuple

from lark import Lark, Transformer
from lark.exceptions import UnexpectedEOF, UnexpectedInput, VisitError

from negtrans.errors import ArityError, FormulaSyntaxError, NegtransError
from negtrans.formula import (
    And,
    App,
    Atom,
    BOT,
    Binary,
    Bot,
    Exists,
    Forall,
    Formula,
    Imp,
    Meta,
    Neg,
    Or,
    Quantifier,
    Term,
    TOP,
    Top,
    Var,
    all_var_names,
    children,
    fresh_name,
    function_arities,
    predicate_arities,
    substitute,
    with_children,
)

logger = logging.getLogger(__name__)

GRAMMAR = r"""
?start: formula

?formula: c_imp | o_imp

?c_imp: c_disj "->" c_imp -> imp
      | c_disj
?o_imp: c_disj "->" o_imp -> imp
      | o_disj

?c_disj: c_conj "|" c_disj -> or_
       | c_conj
?o_disj: c_conj "|" o_disj -> or_
       | o_conj

?c_conj: unary "&" c_conj -> and_
       | unary
?o_conj: unary "&" o_conj -> and_
       | tail

?tail: "~" tail -> neg
     | "forall" NAME "." formula -> forall
     | "exists" NAME "." formula -> exists

?unary: "~" unary -> neg
      | "(" formula ")"
      | "bot" -> bot
      | "top" -> top
      | NAME "(" [terms] ")" -> pred
      | NAME -> prop

terms: term ("," term)*
?term: NAME "(" [terms] ")" -> app
     | NAME -> var

NAME: /[A-Za-z_][A-Za-z0-9_']*/

%import common.WS
%ignore WS
"""


class FormulaTransformer(Transformer):
    """Builds formula nodes from the parse tree."""

    def imp(self, items):
        return Imp(items[0], items[1])

    def or_(self, items):
        return Or(items[0], items[1])

    def and_(self, items):
        return And(items[0], items[1])

    def neg(self, items):
        return Neg(items[0])

    def forall(self, items):
        return Forall(str(items[0]), items[1])

    def exists(self, items):
        return Exists(str(items[0]), items[1])

    def bot(self, _):
        return BOT

    def top(self, _):
        return TOP

    def prop(self, items):
        return Atom(str(items[0]))

    def pred(self, items):
        return Atom(str(items[0]), tuple(items[1] or ()))

    def terms(self, items):
        return list(items)

    def app(self, items):
        return App(str(items[0]), tuple(items[1] or ()))

    def var(self, items):
        return Var(str(items[0]))


_parser = Lark(GRAMMAR, parser="lalr", maybe_placeholders=True)
_transformer = FormulaTransformer()


def _position(error: UnexpectedInput, text: str) -> Tuple[int, int]:
    line = getattr(error, "line", -1)
    column = getattr(error, "column", -1)
    if isinstance(error, UnexpectedEOF) or line is None or line < 1:
        lines = text.split("\n")
        return len(lines), len(lines[-1]) + 1
    return line, column


def _rename_shadowed(f: Formula, bound: FrozenSet[str] = frozenset()) -> Formula:
    if isinstance(f, Quantifier):
        if f.var in bound:
            new = fresh_name(bound | all_var_names(f), base=f.var)
            logger.debug(f"Renaming shadowed binder {f.var} to {new}")
            f = replace(f, var=new, body=substitute(f.body, f.var, Var(new)))
        return replace(f, body=_rename_shadowed(f.body, bound | {f.var}))
    kids = children(f)
    if not kids:
        return f
    return with_children(f, tuple(_rename_shadowed(k, bound) for k in kids))


def _check_arities(f: Formula) -> None:
    for kind, table in (
        ("predicate", predicate_arities(f)),
        ("function symbol", function_arities(f)),
    ):
        for name, arities in table.items():
            if len(arities) > 1:
                shown = ", ".join(str(a) for a in sorted(arities))
                raise ArityError(f"{kind} '{name}' used with arities {shown}")


def parse(text: str) -> Formula:
    """Parse ``text`` into a formula, renaming shadowed binders apart."""
    try:
        tree = _parser.parse(text)
        f = _transformer.transform(tree)
    except UnexpectedInput as e:
        line, column = _position(e, text)
        raise FormulaSyntaxError("unexpected input", line, column, text) from e
    except VisitError as e:
        if isinstance(e.orig_exc, NegtransError):
            raise e.orig_exc from e
        raise
    _check_arities(f)
    return _rename_shadowed(f)


def parse_schema(text: str, metavariables: Iterable[str] = ("A", "B")) -> Formula:
    """Parse a schema, turning the named 0-ary atoms into metavariables."""
    names = set(metavariables)
    return _to_metas(parse(text), names)


def _to_metas(f: Formula, names: set) -> Formula:
    if isinstance(f, Atom) and not f.args and f.pred in names:
        return Meta(f.pred)
    kids = children(f)
    if not kids:
        return f
    return with_children(f, tuple(_to_metas(k, names) for k in kids))


# Printing

_PREC = {And: 3, Or: 2, Imp: 1}
_UNARY = 4


def render_term(t: Term) -> str:
    if isinstance(t, Var):
        return t.name
    return f"{t.fn}({', '.join(render_term(a) for a in t.args)})"


def render(f: Formula) -> str:
    """Print ``f`` with the fewest parentheses that parse back to ``f``."""
    return _render(f, 0, True)


def _render(f: Formula, min_prec: int, open_right: bool) -> str:
    if isinstance(f, Atom):
        if not f.args:
            return f.pred
        return f"{f.pred}({', '.join(render_term(a) for a in f.args)})"
    if isinstance(f, Bot):
        return "bot"
    if isinstance(f, Top):
        return "top"
    if isinstance(f, Meta):
        return f.name
    if isinstance(f, Neg):
        return "~" + _render(f.body, _UNARY, open_right)
    if isinstance(f, Binary):
        prec = _PREC[type(f)]
        wrap = prec < min_prec
        left = _render(f.left, prec + 1, False)
        right = _render(f.right, prec, True if wrap else open_right)
        text = f"{left} {f.symbol.glyph} {right}"
        return f"({text})" if wrap else text
    if isinstance(f, Quantifier):
        text = f"{f.symbol.glyph} {f.var}. {_render(f.body, 0, True)}"
        return text if open_right else f"({text})"
    raise TypeError(f"cannot render {type(f).__name__}")

