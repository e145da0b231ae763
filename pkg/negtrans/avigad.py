"""Negation normal form, the De Morgan dual and Avigad's M-translation.

NNF formulas are built from literals with ``and``, ``or`` and the
quantifiers; a negated atom is a primitive literal. ``bot`` and ``top`` are
kept as 0-ary literals.
"""

import logging
from dataclasses import dataclass
from typing import Tuple, Union

from negtrans.formula import (
    And,
    Atom,
    BOT,
    Bot,
    Exists,
    Forall,
    Formula,
    Imp,
    Neg,
    Or,
    TOP,
    Term,
    Top,
    dneg,
)

logger = logging.getLogger(__name__)

BOT_LITERAL = "bot"
TOP_LITERAL = "top"


@dataclass(frozen=True)
class PosLit:
    pred: str
    args: Tuple[Term, ...] = ()


@dataclass(frozen=True)
class NegLit:
    pred: str
    args: Tuple[Term, ...] = ()


@dataclass(frozen=True)
class NAnd:
    left: "NnfFormula"
    right: "NnfFormula"


@dataclass(frozen=True)
class NOr:
    left: "NnfFormula"
    right: "NnfFormula"


@dataclass(frozen=True)
class NForall:
    var: str
    body: "NnfFormula"


@dataclass(frozen=True)
class NExists:
    var: str
    body: "NnfFormula"


NnfFormula = Union[PosLit, NegLit, NAnd, NOr, NForall, NExists]


def nnf(f: Formula) -> NnfFormula:
    """Classical negation normal form; ``A -> B`` is read as ``~A | B``."""
    if isinstance(f, Atom):
        return PosLit(f.pred, f.args)
    if isinstance(f, Bot):
        return PosLit(BOT_LITERAL)
    if isinstance(f, Top):
        return PosLit(TOP_LITERAL)
    if isinstance(f, Neg):
        return dual(nnf(f.body))
    if isinstance(f, And):
        return NAnd(nnf(f.left), nnf(f.right))
    if isinstance(f, Or):
        return NOr(nnf(f.left), nnf(f.right))
    if isinstance(f, Imp):
        return NOr(dual(nnf(f.left)), nnf(f.right))
    if isinstance(f, Forall):
        return NForall(f.var, nnf(f.body))
    if isinstance(f, Exists):
        return NExists(f.var, nnf(f.body))
    raise TypeError(f"cannot normalize {type(f).__name__}")


def dual(n: NnfFormula) -> NnfFormula:
    """Swap and/or, forall/exists and each literal with its complement."""
    if isinstance(n, PosLit):
        return NegLit(n.pred, n.args)
    if isinstance(n, NegLit):
        return PosLit(n.pred, n.args)
    if isinstance(n, NAnd):
        return NOr(dual(n.left), dual(n.right))
    if isinstance(n, NOr):
        return NAnd(dual(n.left), dual(n.right))
    if isinstance(n, NForall):
        return NExists(n.var, dual(n.body))
    if isinstance(n, NExists):
        return NForall(n.var, dual(n.body))
    raise TypeError(f"not an NNF formula: {type(n).__name__}")


def literal_formula(pred: str, args: Tuple[Term, ...] = ()) -> Formula:
    if pred == BOT_LITERAL and not args:
        return BOT
    if pred == TOP_LITERAL and not args:
        return TOP
    return Atom(pred, args)


def to_formula(n: NnfFormula) -> Formula:
    """The NNF formula as an ordinary formula, with ``~P`` for negative literals."""
    if isinstance(n, PosLit):
        return literal_formula(n.pred, n.args)
    if isinstance(n, NegLit):
        return Neg(literal_formula(n.pred, n.args))
    if isinstance(n, NAnd):
        return And(to_formula(n.left), to_formula(n.right))
    if isinstance(n, NOr):
        return Or(to_formula(n.left), to_formula(n.right))
    if isinstance(n, NForall):
        return Forall(n.var, to_formula(n.body))
    if isinstance(n, NExists):
        return Exists(n.var, to_formula(n.body))
    raise TypeError(f"not an NNF formula: {type(n).__name__}")


def avigad_m(n: NnfFormula) -> Formula:
    """Avigad's M: conjunctions and universals go through the dual."""
    if isinstance(n, (PosLit, NegLit)):
        return to_formula(n)
    if isinstance(n, NOr):
        return Or(avigad_m(n.left), avigad_m(n.right))
    if isinstance(n, NExists):
        return Exists(n.var, avigad_m(n.body))
    if isinstance(n, NAnd):
        return Neg(avigad_m(NOr(dual(n.left), dual(n.right))))
    if isinstance(n, NForall):
        return Neg(avigad_m(NExists(n.var, dual(n.body))))
    raise TypeError(f"not an NNF formula: {type(n).__name__}")


def avigad_m_prime(n: NnfFormula) -> Formula:
    """The modular form of M: ``~~`` on conjuncts and after universals."""
    if isinstance(n, (PosLit, NegLit)):
        return to_formula(n)
    if isinstance(n, NAnd):
        return And(dneg(avigad_m_prime(n.left)), dneg(avigad_m_prime(n.right)))
    if isinstance(n, NOr):
        return Or(avigad_m_prime(n.left), avigad_m_prime(n.right))
    if isinstance(n, NForall):
        return Forall(n.var, dneg(avigad_m_prime(n.body)))
    if isinstance(n, NExists):
        return Exists(n.var, avigad_m_prime(n.body))
    raise TypeError(f"not an NNF formula: {type(n).__name__}")


def avigad_m_simplified(n: NnfFormula) -> Formula:
    """M with conjunctions mapped to conjunctions; this is Kuroda's core."""
    if isinstance(n, (PosLit, NegLit)):
        return to_formula(n)
    if isinstance(n, NAnd):
        return And(avigad_m_simplified(n.left), avigad_m_simplified(n.right))
    if isinstance(n, NOr):
        return Or(avigad_m_simplified(n.left), avigad_m_simplified(n.right))
    if isinstance(n, NForall):
        return Forall(n.var, dneg(avigad_m_simplified(n.body)))
    if isinstance(n, NExists):
        return Exists(n.var, avigad_m_simplified(n.body))
    raise TypeError(f"not an NNF formula: {type(n).__name__}")


def nnf_size(n: NnfFormula) -> int:
    if isinstance(n, (PosLit, NegLit)):
        return 1
    if isinstance(n, (NAnd, NOr)):
        return 1 + nnf_size(n.left) + nnf_size(n.right)
    return 1 + nnf_size(n.body)
