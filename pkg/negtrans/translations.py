"""Modular negative translations as clause tables.

A translation is one clause per connective and quantifier, one for atoms, an
optional literal clause for ``bot`` and a top-level wrapper. Clauses are
schemas over the metavariables ``A`` and ``B``; quantifier clauses bind the
placeholder variable ``x``, which is renamed to the actual bound variable on
instantiation. Input formulas are read with ``~X`` as ``X -> bot``.
"""

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Dict, List, Optional, Tuple

from negtrans.errors import NegtransError, UnknownTranslationError
from negtrans.formula import (
    Atom,
    BOT,
    Binary,
    Bot,
    Formula,
    Meta,
    Quantifier,
    Symbol,
    Top,
    atom,
    expand_neg,
    fill,
    subformulas,
)
from negtrans.kernel import Kernel, combine
from negtrans.parser import parse_schema, render
from negtrans.proofsearch import Decision, Logic

logger = logging.getLogger(__name__)


class BotMode(Enum):
    ATOM = "atom"
    LITERAL = "literal"


@dataclass(frozen=True)
class TranslationSpec:
    """A modular translation: ``A^Tr`` is the wrapper applied to the core image."""

    name: str
    and_: Formula
    or_: Formula
    imp: Formula
    forall: Formula
    exists: Formula
    atom: Formula
    wrapper: Formula
    bot_literal: Formula = BOT
    bot_mode: BotMode = BotMode.ATOM
    modular: bool = True
    linear: bool = True
    description: str = field(default="", compare=False)

    def __post_init__(self):
        for label, schema, holes in self._templates():
            for hole in holes:
                uses = sum(1 for n in subformulas(schema) if isinstance(n, Meta) and n.name == hole)
                if uses < 1 or (self.linear and uses != 1):
                    raise NegtransError(
                        f"{self.name}: hole {hole} occurs {uses} times in the {label} clause"
                    )

    def _templates(self):
        return (
            ("and", self.and_, "AB"),
            ("or", self.or_, "AB"),
            ("imp", self.imp, "AB"),
            ("forall", self.forall, "A"),
            ("exists", self.exists, "A"),
            ("atom", self.atom, "A"),
            ("wrapper", self.wrapper, "A"),
        )

    def clause(self, symbol: Symbol) -> Formula:
        return {
            Symbol.AND: self.and_,
            Symbol.OR: self.or_,
            Symbol.IMP: self.imp,
            Symbol.FORALL: self.forall,
            Symbol.EXISTS: self.exists,
        }[symbol]

    def describe(self) -> Dict[str, str]:
        table = {label: render(schema) for label, schema, _ in self._templates()}
        table["bot"] = (
            render(self.bot_literal)
            if self.bot_mode is BotMode.LITERAL
            else render(fill(self.atom, {"A": BOT}))
        )
        return table


def _spec(name: str, clauses: Dict[str, str], description: str = "", bot: str = "bot") -> TranslationSpec:
    parsed = {key: parse_schema(text) for key, text in clauses.items()}
    return TranslationSpec(
        name=name,
        and_=parsed["and"],
        or_=parsed["or"],
        imp=parsed["imp"],
        forall=parsed["forall"],
        exists=parsed["exists"],
        atom=parsed["atom"],
        wrapper=parsed["wrapper"],
        bot_literal=parse_schema(bot),
        description=description,
    )


_KOLMOGOROV = {
    "atom": "~~A",
    "and": "~~(A & B)",
    "or": "~~(A | B)",
    "imp": "~~(A -> B)",
    "forall": "~~forall x. A",
    "exists": "~~exists x. A",
    "wrapper": "A",
}
_GOEDEL_GENTZEN = {
    "atom": "~~A",
    "and": "A & B",
    "or": "~~(A | B)",
    "imp": "A -> B",
    "forall": "forall x. A",
    "exists": "~~exists x. A",
    "wrapper": "A",
}
_KURODA = {
    "atom": "A",
    "and": "A & B",
    "or": "A | B",
    "imp": "A -> B",
    "forall": "forall x. ~~A",
    "exists": "exists x. A",
    "wrapper": "~~A",
}
_KRIVINE = {
    "atom": "~A",
    "and": "A | B",
    "or": "A & B",
    "imp": "~A & B",
    "forall": "exists x. A",
    "exists": "~exists x. ~A",
    "wrapper": "~A",
}

TRANSLATIONS: Dict[str, TranslationSpec] = {
    spec.name: spec
    for spec in (
        _spec("kolmogorov", _KOLMOGOROV, "double negation in front of every subformula"),
        _spec(
            "goedel_gentzen",
            _GOEDEL_GENTZEN,
            "double negation in front of atoms, disjunctions and existentials",
        ),
        _spec(
            "goedel",
            {**_GOEDEL_GENTZEN, "imp": "~(A & ~B)"},
            "Goedel-Gentzen with implication read as ~(A & ~B)",
        ),
        _spec(
            "goedel_nn",
            {**_GOEDEL_GENTZEN, "imp": "~~(A -> B)"},
            "Goedel-Gentzen keeping the double negation over implications",
        ),
        _spec(
            "gentzen_original",
            {**_GOEDEL_GENTZEN, "or": "~(~A & ~B)", "exists": "~forall x. ~A"},
            "Gentzen's formulation without disjunction and existential",
        ),
        _spec("kuroda", _KURODA, "double negation after universals and at the front"),
        _spec("krivine", _KRIVINE, "dual core with a single negation at the front", bot="top"),
        _spec(
            "g",
            {**_GOEDEL_GENTZEN, "or": "~A -> B"},
            "Goedel-Gentzen with one negation on the left disjunct",
        ),
        _spec(
            "em",
            {
                "atom": "~A",
                "and": "~A -> B",
                "or": "A & B",
                "imp": "~A & B",
                "forall": "~forall x. ~A",
                "exists": "forall x. A",
                "wrapper": "~A",
            },
            "minimal embedding with dual core",
            bot="top",
        ),
        _spec(
            "aczel",
            {**_GOEDEL_GENTZEN, "and": "~~(A & B)"},
            "Goedel-Gentzen with double-negated conjunctions",
        ),
        _spec(
            "kuroda_ml",
            {**_KURODA, "imp": "A -> ~~B"},
            "Kuroda with double negation before each conclusion, for minimal logic",
        ),
    )
}

# The builtins checked for the classical/intuitionistic round trip.
SOUND_TRANSLATIONS = (
    "kolmogorov",
    "goedel_gentzen",
    "goedel",
    "gentzen_original",
    "kuroda",
    "krivine",
    "g",
    "em",
    "aczel",
)


def builtin(name: str) -> TranslationSpec:
    try:
        return TRANSLATIONS[name]
    except KeyError:
        raise UnknownTranslationError(name, TRANSLATIONS) from None


def with_bot_mode(spec: TranslationSpec, mode: BotMode) -> TranslationSpec:
    return replace(spec, bot_mode=mode)


def translate_core(spec: TranslationSpec, f: Formula) -> Formula:
    """The structural recursion, without the wrapper; ``f`` must be Neg-free."""
    if isinstance(f, Bot) and spec.bot_mode is BotMode.LITERAL:
        return spec.bot_literal
    if isinstance(f, (Atom, Bot, Top)):
        return fill(spec.atom, {"A": f})
    if isinstance(f, Binary):
        return fill(
            spec.clause(f.symbol),
            {"A": translate_core(spec, f.left), "B": translate_core(spec, f.right)},
        )
    if isinstance(f, Quantifier):
        return fill(spec.clause(f.symbol), {"A": translate_core(spec, f.body)}, var=f.var)
    raise TypeError(f"cannot translate {type(f).__name__}")


def apply_translation(spec: TranslationSpec, f: Formula) -> Formula:
    if not spec.modular:
        raise NegtransError(f"translation '{spec.name}' is not modular")
    return fill(spec.wrapper, {"A": translate_core(spec, expand_neg(f))})


def translate(name: str, f: Formula) -> Formula:
    return apply_translation(builtin(name), f)


# The relation between translations


CLAUSE_NAMES = ("and", "or", "imp", "forall", "exists", "atom", "bot", "wrapper")


@dataclass(frozen=True)
class ClauseComparison:
    clause: str
    left: Formula
    right: Formula
    forward: Decision
    backward: Decision

    @property
    def decision(self) -> Decision:
        return combine((self.forward, self.backward))

    @property
    def equivalent(self) -> bool:
        return self.forward.is_proved and self.backward.is_proved


@dataclass(frozen=True)
class Relation:
    first: str
    second: str
    clauses: Tuple[ClauseComparison, ...]

    @property
    def related(self) -> bool:
        return all(c.equivalent for c in self.clauses)

    @property
    def unknown(self) -> List[str]:
        return [c.clause for c in self.clauses if c.decision.is_unknown]

    def as_record(self) -> Dict[str, object]:
        return {
            "first": self.first,
            "second": self.second,
            "related": self.related,
            "clauses": {
                c.clause: {
                    "left": render(c.left),
                    "right": render(c.right),
                    "verdict": c.decision.verdict.value,
                }
                for c in self.clauses
            },
        }


_P0 = atom("P0")
_P1 = atom("P1")
_PX = atom("P", "x")
_CLAUSE_SYMBOLS = {symbol.value: symbol for symbol in Symbol}


def clause_instance(spec: TranslationSpec, clause: str) -> Formula:
    """The clause with its holes filled by fresh atoms."""
    if clause in _CLAUSE_SYMBOLS:
        symbol = _CLAUSE_SYMBOLS[clause]
        holes = {"A": _PX} if symbol.is_quantifier else {"A": _P0, "B": _P1}
        return fill(spec.clause(symbol), holes)
    if clause == "atom":
        return fill(spec.atom, {"A": _P0})
    if clause == "bot":
        return translate_core(spec, BOT)
    if clause == "wrapper":
        return fill(spec.wrapper, {"A": _P0})
    raise NegtransError(f"unknown clause '{clause}'")


def translations_related(
    first: TranslationSpec,
    second: TranslationSpec,
    kernel: Optional[Kernel] = None,
    logic: Logic = Logic.INTUITIONISTIC,
) -> Relation:
    """Clause-by-clause equivalence; Unknown verdicts are kept, never coerced."""
    kernel = kernel or Kernel()
    comparisons = []
    for clause in CLAUSE_NAMES:
        left = clause_instance(first, clause)
        right = clause_instance(second, clause)
        forward, backward = kernel.equivalent(left, right, logic)
        comparisons.append(ClauseComparison(clause, left, right, forward, backward))
    relation = Relation(first.name, second.name, tuple(comparisons))
    if relation.unknown:
        logger.warning(
            f"{first.name} ~ {second.name}: undecided clauses {', '.join(relation.unknown)}"
        )
    return relation
