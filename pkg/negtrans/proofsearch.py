"""Deciders for classical, intuitionistic and minimal propositional logic, and
depth-bounded first-order proof search.

Minimal logic is handled by reading ``bot`` as an ordinary fresh atom: with
``bot`` uninterpreted, ex falso is no longer derivable and intuitionistic
provability of the result coincides with minimal provability of the input.
"""

import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from negtrans.errors import QuantifiedInputError, UnknownLogicError
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
    Quantifier,
    Term,
    Top,
    Var,
    all_var_names,
    closed_terms,
    dneg,
    expand_neg,
    fresh_name,
    free_vars,
    is_propositional,
    predicate_arities,
    replace_bot,
    subformulas,
    substitute,
)

logger = logging.getLogger(__name__)

DEFAULT_FO_DEPTH = 12
DEFAULT_NODE_BUDGET = 20000


class Logic(Enum):
    CLASSICAL = "classical"
    INTUITIONISTIC = "intuitionistic"
    MINIMAL = "minimal"

    @classmethod
    def from_name(cls, name: str) -> "Logic":
        """Accepts the value or one of the short names cpc, ipc, ml."""
        lowered = name.lower()
        if lowered in _LOGIC_ALIASES:
            return _LOGIC_ALIASES[lowered]
        try:
            return cls(lowered)
        except ValueError:
            raise UnknownLogicError(name, [logic.value for logic in cls] + list(_LOGIC_ALIASES)) from None


_LOGIC_ALIASES = {
    "cpc": Logic.CLASSICAL,
    "cl": Logic.CLASSICAL,
    "ipc": Logic.INTUITIONISTIC,
    "il": Logic.INTUITIONISTIC,
    "ml": Logic.MINIMAL,
}


class Verdict(Enum):
    PROVED = "proved"
    REFUTED = "refuted"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Decision:
    """Three-valued verdict. ``witness`` holds a countermodel when one was found."""

    verdict: Verdict
    depth: Optional[int] = None
    note: str = ""
    witness: Optional[Any] = field(default=None, compare=False)

    @property
    def is_proved(self) -> bool:
        return self.verdict is Verdict.PROVED

    @property
    def is_refuted(self) -> bool:
        return self.verdict is Verdict.REFUTED

    @property
    def is_unknown(self) -> bool:
        return self.verdict is Verdict.UNKNOWN

    def __str__(self) -> str:
        text = self.verdict.value.capitalize()
        if self.depth is not None:
            text += f" (depth {self.depth})"
        if self.note:
            text += f" [{self.note}]"
        return text


PROVED = Decision(Verdict.PROVED)
REFUTED = Decision(Verdict.REFUTED)


@dataclass(frozen=True)
class Sequent:
    antecedent: FrozenSet[Formula]
    succedent: Formula


def _require_propositional(f: Formula, who: str) -> None:
    if not is_propositional(f):
        raise QuantifiedInputError(f"{who} accepts only quantifier-free formulas")


# Classical propositional logic


def evaluate(f: Formula, valuation: Dict[Atom, bool]) -> bool:
    """Classical truth value; atoms missing from ``valuation`` are false."""
    if isinstance(f, Atom):
        return valuation.get(f, False)
    if isinstance(f, Bot):
        return False
    if isinstance(f, Top):
        return True
    if isinstance(f, Neg):
        return not evaluate(f.body, valuation)
    if isinstance(f, And):
        return evaluate(f.left, valuation) and evaluate(f.right, valuation)
    if isinstance(f, Or):
        return evaluate(f.left, valuation) or evaluate(f.right, valuation)
    if isinstance(f, Imp):
        return (not evaluate(f.left, valuation)) or evaluate(f.right, valuation)
    raise QuantifiedInputError("classical evaluation needs a quantifier-free formula")


def atoms_of(f: Formula) -> List[Atom]:
    found = {node for node in subformulas(f) if isinstance(node, Atom)}
    return sorted(found, key=lambda a: (a.pred, repr(a.args)))


def prove_cpc(f: Formula) -> Decision:
    """Truth-table decision for classical propositional logic."""
    _require_propositional(f, "prove_cpc")
    letters = atoms_of(f)
    for values in itertools.product((False, True), repeat=len(letters)):
        if not evaluate(f, dict(zip(letters, values))):
            return REFUTED
    return PROVED


# Intuitionistic propositional logic (G4ip)


class _G4ip:
    """Contraction-free sequent search; the memo table is local to one instance."""

    def __init__(self):
        self._memo: Dict[Tuple[FrozenSet[Formula], Formula], bool] = {}

    def prove(self, gamma: FrozenSet[Formula], goal: Formula) -> bool:
        key = (gamma, goal)
        known = self._memo.get(key)
        if known is None:
            known = self._search(gamma, goal)
            self._memo[key] = known
        return known

    def _search(self, gamma: FrozenSet[Formula], goal: Formula) -> bool:
        if BOT in gamma or goal in gamma or isinstance(goal, Top):
            return True

        for f in gamma:
            rest = gamma - {f}
            if isinstance(f, And):
                return self.prove(rest | {f.left, f.right}, goal)
            if isinstance(f, Or):
                return self.prove(rest | {f.left}, goal) and self.prove(
                    rest | {f.right}, goal
                )
            if isinstance(f, Top):
                return self.prove(rest, goal)
            if isinstance(f, Imp):
                a, b = f.left, f.right
                if isinstance(a, Bot) or isinstance(b, Top) or b in rest:
                    return self.prove(rest, goal)
                if isinstance(a, Top) or a in rest:
                    return self.prove(rest | {b}, goal)
                if isinstance(a, And):
                    return self.prove(rest | {Imp(a.left, Imp(a.right, b))}, goal)
                if isinstance(a, Or):
                    return self.prove(rest | {Imp(a.left, b), Imp(a.right, b)}, goal)

        if isinstance(goal, And):
            return self.prove(gamma, goal.left) and self.prove(gamma, goal.right)
        if isinstance(goal, Imp):
            return self.prove(gamma | {goal.left}, goal.right)

        if isinstance(goal, Or):
            if self.prove(gamma, goal.left) or self.prove(gamma, goal.right):
                return True
        for f in gamma:
            if isinstance(f, Imp) and isinstance(f.left, Imp):
                c, d, b = f.left.left, f.left.right, f.right
                rest = gamma - {f}
                if self.prove(rest | {Imp(d, b)}, Imp(c, d)) and self.prove(
                    rest | {b}, goal
                ):
                    return True
        return False


def prove_ipc(f: Formula) -> Decision:
    """Complete decision for intuitionistic propositional logic."""
    _require_propositional(f, "prove_ipc")
    proved = _G4ip().prove(frozenset(), expand_neg(f))
    return PROVED if proved else REFUTED


def falsum_atom(f: Formula) -> Atom:
    """A 0-ary atom, unused in ``f``, standing in for ``bot`` in minimal logic."""
    taken = set(predicate_arities(f))
    name = "_bot"
    while name in taken:
        name += "_"
    return Atom(name)


def minimal_form(f: Formula) -> Formula:
    expanded = expand_neg(f)
    return replace_bot(expanded, falsum_atom(expanded))


def prove_minimal(f: Formula) -> Decision:
    """Complete decision for minimal propositional logic."""
    _require_propositional(f, "prove_minimal")
    proved = _G4ip().prove(frozenset(), minimal_form(f))
    return PROVED if proved else REFUTED


def decide_propositional(f: Formula, logic: Logic) -> Decision:
    if logic is Logic.CLASSICAL:
        return prove_cpc(f)
    if logic is Logic.INTUITIONISTIC:
        return prove_ipc(f)
    return prove_minimal(f)


def glivenko_check(f: Formula) -> bool:
    """Classical provability of ``f`` agrees with intuitionistic provability of ~~f."""
    return prove_cpc(f).is_proved == prove_ipc(dneg(f)).is_proved


# First-order bounded search


class _BudgetExhausted(Exception):
    pass


@lru_cache(maxsize=65536)
def _sort_key(f: Formula) -> str:
    return repr(f)


def _ordered(formulas: Iterable[Formula]) -> List[Formula]:
    return sorted(formulas, key=_sort_key)


def _sequent_names(gamma: Iterable[Formula], extra: Sequence[Formula]) -> set:
    names = set()
    for f in itertools.chain(gamma, extra):
        names |= all_var_names(f)
    return names


def _sequent_terms(gamma: FrozenSet[Formula], goals: Sequence[Formula]) -> List[Term]:
    """Instantiation candidates: free variables and ground terms of the sequent."""
    names = set()
    ground = set()
    for f in itertools.chain(gamma, goals):
        names |= free_vars(f)
        ground |= closed_terms(f)
    terms: List[Term] = [Var(n) for n in sorted(names)]
    terms += sorted(ground, key=repr)
    if not terms:
        terms = [Var(fresh_name(_sequent_names(gamma, goals)))]
    return terms


def _open(q: Quantifier, gamma: FrozenSet[Formula], goals: Sequence[Formula]) -> Formula:
    param = fresh_name(_sequent_names(gamma, goals))
    return substitute(q.body, q.var, Var(param))


def _exists_implication(a: Exists, b: Formula) -> Formula:
    var, body = a.var, a.body
    if var in free_vars(b):
        new = fresh_name(all_var_names(a) | all_var_names(b), base=var)
        body = substitute(body, var, Var(new))
        var = new
    return Forall(var, Imp(body, b))


class _IntuitionisticSearch:
    def __init__(self, node_budget: int):
        self.node_budget = node_budget
        self.nodes = 0
        self._failed: Dict[Tuple[FrozenSet[Formula], Formula], int] = {}

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise _BudgetExhausted()

    def solve(self, gamma: FrozenSet[Formula], goal: Formula, depth: int) -> Optional[int]:
        self._tick()
        if BOT in gamma or goal in gamma or isinstance(goal, Top):
            return 0
        key = (gamma, goal)
        if self._failed.get(key, -1) >= depth:
            return None
        used = self._expand(gamma, goal, depth)
        if used is None:
            self._failed[key] = depth
        return used

    def _all(self, premises: Sequence[Tuple[FrozenSet[Formula], Formula]], depth: int) -> Optional[int]:
        worst = 0
        for gamma, goal in premises:
            used = self.solve(gamma, goal, depth)
            if used is None:
                return None
            worst = max(worst, used)
        return worst

    def _invertible(self, gamma: FrozenSet[Formula], goal: Formula):
        for f in _ordered(gamma):
            rest = gamma - {f}
            if isinstance(f, And):
                return [(rest | {f.left, f.right}, goal)]
            if isinstance(f, Or):
                return [(rest | {f.left}, goal), (rest | {f.right}, goal)]
            if isinstance(f, Top):
                return [(rest, goal)]
            if isinstance(f, Exists):
                return [(rest | {_open(f, gamma, (goal,))}, goal)]
            if isinstance(f, Imp):
                a, b = f.left, f.right
                if isinstance(a, Bot) or isinstance(b, Top) or b in rest:
                    return [(rest, goal)]
                if isinstance(a, Top) or a in rest:
                    return [(rest | {b}, goal)]
                if isinstance(a, And):
                    return [(rest | {Imp(a.left, Imp(a.right, b))}, goal)]
                if isinstance(a, Or):
                    return [(rest | {Imp(a.left, b), Imp(a.right, b)}, goal)]
                if isinstance(a, Exists):
                    return [(rest | {_exists_implication(a, b)}, goal)]
        if isinstance(goal, And):
            return [(gamma, goal.left), (gamma, goal.right)]
        if isinstance(goal, Imp):
            return [(gamma | {goal.left}, goal.right)]
        if isinstance(goal, Forall):
            return [(gamma, _open(goal, gamma, (goal,)))]
        return None

    def _expand(self, gamma: FrozenSet[Formula], goal: Formula, depth: int) -> Optional[int]:
        premises = self._invertible(gamma, goal)
        if premises is not None:
            return self._all(premises, depth)
        if depth == 0:
            return None

        options: List[List[Tuple[FrozenSet[Formula], Formula]]] = []
        if isinstance(goal, Or):
            options += [[(gamma, goal.left)], [(gamma, goal.right)]]
        terms = _sequent_terms(gamma, (goal,))
        if isinstance(goal, Exists):
            for t in terms:
                options.append([(gamma, substitute(goal.body, goal.var, t))])
        for f in _ordered(gamma):
            if isinstance(f, Imp):
                options.append([(gamma, f.left), ((gamma - {f}) | {f.right}, goal)])
            elif isinstance(f, Forall):
                for t in terms:
                    instance = substitute(f.body, f.var, t)
                    if instance not in gamma:
                        options.append([(gamma | {instance}, goal)])

        for premises in options:
            used = self._all(premises, depth - 1)
            if used is not None:
                return used + 1
        return None


class _ClassicalSearch:
    """Multi-succedent search with one round of quantifier instantiation per level."""

    def __init__(self, node_budget: int):
        self.node_budget = node_budget
        self.nodes = 0
        self._failed: Dict[Tuple[FrozenSet[Formula], FrozenSet[Formula]], int] = {}

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise _BudgetExhausted()

    def solve(self, gamma: FrozenSet[Formula], delta: FrozenSet[Formula], depth: int) -> Optional[int]:
        self._tick()
        if BOT in gamma or any(isinstance(d, Top) for d in delta) or gamma & delta:
            return 0
        key = (gamma, delta)
        if self._failed.get(key, -1) >= depth:
            return None
        used = self._expand(gamma, delta, depth)
        if used is None:
            self._failed[key] = depth
        return used

    def _both(self, first, second, depth: int) -> Optional[int]:
        a = self.solve(first[0], first[1], depth)
        if a is None:
            return None
        b = self.solve(second[0], second[1], depth)
        return None if b is None else max(a, b)

    def _expand(self, gamma: FrozenSet[Formula], delta: FrozenSet[Formula], depth: int) -> Optional[int]:
        goals = tuple(delta)
        for f in _ordered(gamma):
            rest = gamma - {f}
            if isinstance(f, And):
                return self.solve(rest | {f.left, f.right}, delta, depth)
            if isinstance(f, Or):
                return self._both((rest | {f.left}, delta), (rest | {f.right}, delta), depth)
            if isinstance(f, Imp):
                return self._both((rest, delta | {f.left}), (rest | {f.right}, delta), depth)
            if isinstance(f, Top):
                return self.solve(rest, delta, depth)
            if isinstance(f, Exists):
                return self.solve(rest | {_open(f, gamma, goals)}, delta, depth)
        for f in _ordered(delta):
            rest = delta - {f}
            if isinstance(f, Or):
                return self.solve(gamma, rest | {f.left, f.right}, depth)
            if isinstance(f, And):
                return self._both((gamma, rest | {f.left}), (gamma, rest | {f.right}), depth)
            if isinstance(f, Imp):
                return self.solve(gamma | {f.left}, rest | {f.right}, depth)
            if isinstance(f, Bot):
                return self.solve(gamma, rest, depth)
            if isinstance(f, Forall):
                return self.solve(gamma, rest | {_open(f, gamma, goals)}, depth)
        if depth == 0:
            return None

        terms = _sequent_terms(gamma, goals)
        new_gamma = set(gamma)
        new_delta = set(delta)
        for f in gamma:
            if isinstance(f, Forall):
                new_gamma.update(substitute(f.body, f.var, t) for t in terms)
        for f in delta:
            if isinstance(f, Exists):
                new_delta.update(substitute(f.body, f.var, t) for t in terms)
        if len(new_gamma) == len(gamma) and len(new_delta) == len(delta):
            return None
        used = self.solve(frozenset(new_gamma), frozenset(new_delta), depth - 1)
        return None if used is None else used + 1


def prove_sequent(
    sequent: Sequent,
    logic: Logic = Logic.INTUITIONISTIC,
    depth: int = DEFAULT_FO_DEPTH,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> Decision:
    """Iterative-deepening backward search; returns Proved or Unknown, never Refuted."""
    gamma = frozenset(expand_neg(a) for a in sequent.antecedent)
    goal = expand_neg(sequent.succedent)
    if logic is Logic.MINIMAL:
        falsum = falsum_atom(And(goal, _conjoin(gamma)))
        gamma = frozenset(replace_bot(a, falsum) for a in gamma)
        goal = replace_bot(goal, falsum)
    search = (
        _ClassicalSearch(node_budget)
        if logic is Logic.CLASSICAL
        else _IntuitionisticSearch(node_budget)
    )
    try:
        for bound in range(depth + 1):
            if logic is Logic.CLASSICAL:
                used = search.solve(gamma, frozenset((goal,)), bound)
            else:
                used = search.solve(gamma, goal, bound)
            if used is not None:
                logger.debug(f"Proved at depth {used} after {search.nodes} nodes")
                return Decision(Verdict.PROVED, depth=used)
    except _BudgetExhausted:
        logger.debug(f"Node budget {node_budget} exhausted")
        return Decision(Verdict.UNKNOWN, note=f"node budget {node_budget} exhausted")
    return Decision(Verdict.UNKNOWN, note=f"no proof within depth {depth}")


def _conjoin(formulas: Iterable[Formula]) -> Formula:
    result: Formula = Top()
    for f in formulas:
        result = And(f, result)
    return result


def prove_fo_bounded(
    f: Formula,
    logic: Logic = Logic.INTUITIONISTIC,
    depth: int = DEFAULT_FO_DEPTH,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> Decision:
    return prove_sequent(Sequent(frozenset(), f), logic, depth, node_budget)
