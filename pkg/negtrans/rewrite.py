"""The simplification calculus on double-negated formulas.

An inside rule moves the inner negations ``N`` out over an outer ``~~``::

    ~~(N A # N B)  =>  N(N1 A #' N2 B)        ~~Qx N A  =>  N(Q'x N1 A)

an outside rule moves ``N`` in over the inner ``~~``::

    N(~~A # ~~B)  =>  N1 N A #' N2 N B        N Qx ~~A  =>  Q'x N1 N A

Matching is syntactic, with ``~`` a primitive node. Every connective and
quantifier node of a path's start formula carries a provenance tag; a rewrite
hands the tag of the symbol it acts on to the symbol it produces.
"""

import itertools
import logging
import re
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Dict, Iterator, List, Optional, Tuple

from negtrans.errors import (
    BudgetExceededError,
    InvalidRuleSetError,
    NotARedexError,
    RuleFormatError,
    UnknownRuleSetError,
)
from negtrans.formula import (
    Binary,
    Formula,
    Meta,
    Neg,
    Position,
    Quantifier,
    Symbol,
    atom,
    children,
    count_connectives,
    expand_neg,
    fill,
    negation_count,
    neg,
    positions,
    replace_at,
    subformula_at,
    with_children,
)
from negtrans.kernel import Kernel, combine
from negtrans.kripke import CuratedEntry, Countermodel
from negtrans.parser import parse_schema, render
from negtrans.proofsearch import Decision, Logic
from negtrans.translations import translate

logger = logging.getLogger(__name__)

_A = Meta("A")
_B = Meta("B")
_PLACEHOLDER = "x"

SYMBOL_ORDER = (Symbol.AND, Symbol.OR, Symbol.IMP, Symbol.FORALL, Symbol.EXISTS)


class Side(Enum):
    INSIDE = "inside"
    OUTSIDE = "outside"


def _node(symbol: Symbol, left: Formula, right: Optional[Formula] = None) -> Formula:
    if symbol.is_quantifier:
        return symbol.node(_PLACEHOLDER, left)
    return symbol.node(left, right)


@dataclass(frozen=True)
class RewriteRule:
    """One transformation; ``n``, ``n1`` and ``n2`` are negation counts."""

    side: Side
    n: int
    symbol: Symbol
    result: Symbol
    n1: int = 0
    n2: int = 0

    def __post_init__(self):
        if self.n not in (1, 2):
            raise InvalidRuleSetError(f"N must be one or two negations, got {self.n}")
        if self.n1 not in (0, 1, 2) or self.n2 not in (0, 1, 2):
            raise InvalidRuleSetError("N1 and N2 are at most two negations")
        if self.symbol.is_quantifier != self.result.is_quantifier:
            raise InvalidRuleSetError(
                f"{self.symbol.value} cannot be rewritten to {self.result.value}"
            )
        if self.symbol.is_quantifier and self.n2:
            raise InvalidRuleSetError("quantifier rules have no N2")

    @cached_property
    def lhs(self) -> Formula:
        if self.side is Side.INSIDE:
            inner = neg(_A, self.n)
            return neg(_node(self.symbol, inner, neg(_B, self.n)), 2)
        return neg(_node(self.symbol, neg(_A, 2), neg(_B, 2)), self.n)

    @cached_property
    def rhs(self) -> Formula:
        if self.side is Side.INSIDE:
            return neg(_node(self.result, neg(_A, self.n1), neg(_B, self.n2)), self.n)
        return _node(
            self.result, neg(_A, self.n1 + self.n), neg(_B, self.n2 + self.n)
        )

    @property
    def lhs_negations(self) -> int:
        return negation_count(self.lhs)

    @property
    def rhs_negations(self) -> int:
        return negation_count(self.rhs)

    @property
    def decreases(self) -> bool:
        return self.rhs_negations < self.lhs_negations

    def instance(self) -> Tuple[Formula, Formula]:
        """Both sides with the holes filled by fresh atoms."""
        if self.symbol.is_quantifier:
            holes = {"A": atom("P", _PLACEHOLDER)}
        else:
            holes = {"A": atom("P0"), "B": atom("P1")}
        return fill(self.lhs, holes), fill(self.rhs, holes)

    def __str__(self) -> str:
        return f"{render(self.lhs)} => {render(self.rhs)}"


@dataclass(frozen=True)
class RuleSet:
    name: str
    side: Side
    n: int
    rules: Tuple[RewriteRule, ...] = ()

    def __post_init__(self):
        seen = set()
        for rule in self.rules:
            if rule.side is not self.side or rule.n != self.n:
                raise InvalidRuleSetError(
                    f"{self.name}: rule {rule} does not share side {self.side.value} and N={self.n}"
                )
            if rule.symbol in seen:
                raise InvalidRuleSetError(
                    f"{self.name}: two rules for {rule.symbol.value}"
                )
            seen.add(rule.symbol)
        ordered = tuple(sorted(self.rules, key=lambda r: SYMBOL_ORDER.index(r.symbol)))
        object.__setattr__(self, "rules", ordered)

    @property
    def symbols(self) -> Tuple[Symbol, ...]:
        return tuple(rule.symbol for rule in self.rules)

    def rule_for(self, symbol: Symbol) -> Optional[RewriteRule]:
        for rule in self.rules:
            if rule.symbol is symbol:
                return rule
        return None

    def without(self, symbol: Symbol, name: Optional[str] = None) -> "RuleSet":
        kept = tuple(r for r in self.rules if r.symbol is not symbol)
        return RuleSet(name or f"{self.name}_minus_{symbol.value}", self.side, self.n, kept)

    def with_rule(self, rule: RewriteRule, name: Optional[str] = None) -> "RuleSet":
        kept = tuple(r for r in self.rules if r.symbol is not rule.symbol)
        return RuleSet(name or self.name, self.side, self.n, kept + (rule,))

    def same_rules(self, other: "RuleSet") -> bool:
        return set(self.rules) == set(other.rules)


# Built-in rule sets

_IN, _OUT = Side.INSIDE, Side.OUTSIDE
_AND, _OR, _IMP, _ALL, _EX = SYMBOL_ORDER

_BASE: Dict[str, RuleSet] = {
    "r1": RuleSet(
        "r1",
        _IN,
        2,
        (
            RewriteRule(_IN, 2, _AND, _AND),
            RewriteRule(_IN, 2, _OR, _OR),
            RewriteRule(_IN, 2, _IMP, _IMP),
            RewriteRule(_IN, 2, _EX, _EX),
        ),
    ),
    "r2": RuleSet(
        "r2",
        _IN,
        1,
        (
            RewriteRule(_IN, 1, _AND, _OR),
            RewriteRule(_IN, 1, _OR, _AND),
            RewriteRule(_IN, 1, _IMP, _AND, n1=1),
            RewriteRule(_IN, 1, _ALL, _EX),
        ),
    ),
    "r3": RuleSet(
        "r3",
        _OUT,
        2,
        (
            RewriteRule(_OUT, 2, _AND, _AND),
            RewriteRule(_OUT, 2, _OR, _IMP, n1=1),
            RewriteRule(_OUT, 2, _IMP, _IMP),
            RewriteRule(_OUT, 2, _ALL, _ALL),
        ),
    ),
    "r4": RuleSet(
        "r4",
        _OUT,
        1,
        (
            RewriteRule(_OUT, 1, _AND, _IMP, n1=1),
            RewriteRule(_OUT, 1, _OR, _AND),
            RewriteRule(_OUT, 1, _IMP, _AND, n1=1),
            RewriteRule(_OUT, 1, _EX, _ALL),
        ),
    ),
}
_BASE["r3_prime"] = _BASE["r3"].without(_OR, "r3_prime")
_BASE["r1_tilde"] = _BASE["r1"].with_rule(RewriteRule(_IN, 2, _IMP, _IMP, n2=2), "r1_tilde")
_BASE["example_nonmaximal"] = RuleSet(
    "example_nonmaximal",
    _IN,
    1,
    (
        RewriteRule(_IN, 1, _AND, _OR, n2=2),
        RewriteRule(_IN, 1, _OR, _AND),
    ),
)

MAXIMAL_NAMES = ("r1", "r2", "r3", "r4")

# Rule sets whose standard path lands on a named translation.
TRANSLATION_OF = {
    "r1": "kuroda",
    "r2": "krivine",
    "r3": "g",
    "r4": "em",
    "r3_prime": "goedel_gentzen",
    "r3_prime_minus_imp": "goedel_nn",
    "r3_prime_minus_and": "aczel",
    "r1_tilde": "kuroda_ml",
}

_MINUS = re.compile(r"_minus_(and|or|imp|forall|exists)")


def builtin_ruleset(name: str) -> RuleSet:
    """A base set, optionally followed by ``_minus_<symbol>`` suffixes."""
    for base in sorted(_BASE, key=len, reverse=True):
        if not name.startswith(base):
            continue
        rest = name[len(base):]
        removed = _MINUS.findall(rest)
        if "".join(f"_minus_{s}" for s in removed) != rest:
            continue
        rs = _BASE[base]
        for symbol in removed:
            rs = rs.without(Symbol(symbol))
        return RuleSet(name, rs.side, rs.n, rs.rules)
    raise UnknownRuleSetError(name, list(_BASE) + ["<name>_minus_<symbol>"])


def ruleset_names() -> List[str]:
    return list(_BASE)


# Rule text format


def all_rules(side: Side, n: int, symbol: Symbol) -> Iterator[RewriteRule]:
    """Every schema of the given side, N and symbol, decreasing or not."""
    results = [s for s in SYMBOL_ORDER if s.is_quantifier == symbol.is_quantifier]
    second = (0,) if symbol.is_quantifier else (0, 1, 2)
    for result, n1, n2 in itertools.product(results, (0, 1, 2), second):
        yield RewriteRule(side, n, symbol, result, n1, n2)


def rule_from_schemas(lhs: Formula, rhs: Formula) -> RewriteRule:
    for side, n, symbol in itertools.product(Side, (1, 2), SYMBOL_ORDER):
        for rule in all_rules(side, n, symbol):
            if rule.lhs == lhs and rule.rhs == rhs:
                return rule
    raise RuleFormatError(f"{render(lhs)} => {render(rhs)} is not a simplification schema")


def parse_rule(text: str) -> RewriteRule:
    if "=>" not in text:
        raise RuleFormatError(f"expected 'LHS => RHS', got '{text.strip()}'")
    left, right = text.split("=>", 1)
    return rule_from_schemas(parse_schema(left), parse_schema(right))


def load_ruleset(text: str, name: Optional[str] = None) -> RuleSet:
    """Read one rule per line; ``#`` starts a comment, ``# name: <id>`` names the set."""
    rules = []
    for line_no, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if stripped.startswith("#"):
            header = stripped[1:].strip()
            if header.startswith("name:") and name is None:
                name = header[len("name:"):].strip()
            continue
        if not stripped:
            continue
        try:
            rules.append(parse_rule(stripped.split("#", 1)[0]))
        except RuleFormatError as e:
            raise RuleFormatError(str(e), line_no) from e
        except Exception as e:
            raise RuleFormatError(f"cannot read rule: {e}", line_no) from e
    if not rules:
        raise RuleFormatError("rule set has no rules")
    return RuleSet(name or "custom", rules[0].side, rules[0].n, tuple(rules))


def dump_ruleset(rs: RuleSet) -> str:
    lines = [f"# name: {rs.name}"]
    lines += [str(rule) for rule in rs.rules]
    return "\n".join(lines) + "\n"


# Matching


@dataclass(frozen=True)
class Match:
    holes: Dict[str, Formula] = field(hash=False)
    var: Optional[str] = None
    tag: Optional[int] = None


def match(pattern: Formula, f: Formula) -> Optional[Match]:
    """Syntactic match of a schema against a formula."""
    holes: Dict[str, Formula] = {}
    found: Dict[str, object] = {"var": None, "tag": None}

    def walk(p: Formula, g: Formula) -> bool:
        if isinstance(p, Meta):
            if p.name in holes:
                return holes[p.name] == g
            holes[p.name] = g
            return True
        if isinstance(p, Neg):
            return isinstance(g, Neg) and walk(p.body, g.body)
        if isinstance(p, Binary):
            if type(g) is not type(p):
                return False
            found["tag"] = g.tag
            return walk(p.left, g.left) and walk(p.right, g.right)
        if isinstance(p, Quantifier):
            if type(g) is not type(p):
                return False
            found["var"] = g.var
            found["tag"] = g.tag
            return walk(p.body, g.body)
        return p == g

    if not walk(pattern, f):
        return None
    return Match(holes, found["var"], found["tag"])


def instantiate(schema: Formula, m: Match) -> Formula:
    return fill(schema, m.holes, var=m.var, tag=m.tag)


@dataclass(frozen=True)
class Redex:
    position: Position
    rule: RewriteRule


def find_redexes(f: Formula, rs: RuleSet, order: str = "pre") -> List[Redex]:
    found = []
    for pos in positions(f, order):
        sub = subformula_at(f, pos)
        for rule in rs.rules:
            if match(rule.lhs, sub) is not None:
                found.append(Redex(pos, rule))
    return found


def apply_at(f: Formula, pos: Position, rule: RewriteRule) -> Formula:
    try:
        sub = subformula_at(f, pos)
    except (IndexError, TypeError):
        raise NotARedexError(f"no subformula at position {list(pos)}") from None
    m = match(rule.lhs, sub)
    if m is None:
        raise NotARedexError(f"{render(sub)} does not match {render(rule.lhs)}")
    return replace_at(f, pos, instantiate(rule.rhs, m))


# Provenance


def label(f: Formula, start: int = 1) -> Formula:
    """Tag every connective and quantifier with a distinct id in pre-order."""
    counter = itertools.count(start)

    def walk(g: Formula) -> Formula:
        if isinstance(g, Binary):
            tag = next(counter)
            return type(g)(walk(g.left), walk(g.right), tag)
        if isinstance(g, Quantifier):
            tag = next(counter)
            return type(g)(g.var, walk(g.body), tag)
        kids = children(g)
        if not kids:
            return g
        return with_children(g, tuple(walk(k) for k in kids))

    return walk(f)


def tags(f: Formula) -> List[int]:
    found = []
    for pos in positions(f):
        node = subformula_at(f, pos)
        if isinstance(node, (Binary, Quantifier)) and node.tag is not None:
            found.append(node.tag)
    return found


def kolmogorov_form(source: Formula) -> Formula:
    """The Kolmogorov image of ``source``, with provenance tags."""
    return label(translate("kolmogorov", source))


# Paths


@dataclass(frozen=True)
class Step:
    position: Position
    rule: RewriteRule
    tag: Optional[int]


@dataclass(frozen=True)
class SimplificationPath:
    nodes: Tuple[Formula, ...]
    steps: Tuple[Step, ...] = ()

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def start(self) -> Formula:
        return self.nodes[0]

    @property
    def final(self) -> Formula:
        return self.nodes[-1]

    def acted_tags(self) -> List[Optional[int]]:
        return [step.tag for step in self.steps]

    def revisited_tags(self) -> List[int]:
        seen, twice = set(), []
        for tag in self.acted_tags():
            if tag in seen and tag not in twice:
                twice.append(tag)
            seen.add(tag)
        return twice

    def extend(self, step: Step, node: Formula) -> "SimplificationPath":
        return SimplificationPath(self.nodes + (node,), self.steps + (step,))

    def as_record(self) -> Dict[str, object]:
        return {
            "length": self.length,
            "nodes": [render(n) for n in self.nodes],
            "steps": [
                {"position": list(s.position), "rule": str(s.rule), "symbol": s.tag}
                for s in self.steps
            ],
        }


def _step(f: Formula, redex: Redex) -> Tuple[Step, Formula]:
    sub = subformula_at(f, redex.position)
    m = match(redex.rule.lhs, sub)
    new = replace_at(f, redex.position, instantiate(redex.rule.rhs, m))
    return Step(redex.position, redex.rule, m.tag), new


def traversal_order(rs: RuleSet) -> str:
    """Innermost first for inside sets, outermost first for outside sets."""
    return "post" if rs.side is Side.INSIDE else "pre"


def standard_path(f: Formula, rs: RuleSet) -> SimplificationPath:
    path = SimplificationPath((f,))
    order = traversal_order(rs)
    while True:
        redexes = find_redexes(path.final, rs, order)
        if not redexes:
            return path
        step, node = _step(path.final, redexes[0])
        path = path.extend(step, node)


def expected_length(source: Formula, rs: RuleSet) -> int:
    counts = count_connectives(expand_neg(source))
    return sum(counts[symbol] for symbol in rs.symbols)


def longest_result(f: Formula, rs: RuleSet) -> Formula:
    return standard_path(f, rs).final


def enumerate_all_paths(f: Formula, rs: RuleSet, budget: int = 200000) -> List[SimplificationPath]:
    """Every maximal path from ``f``; raises BudgetExceededError past ``budget`` nodes."""
    finished: List[SimplificationPath] = []
    visited = 0
    stack = [SimplificationPath((f,))]
    while stack:
        path = stack.pop()
        visited += 1
        if visited > budget:
            raise BudgetExceededError(f"more than {budget} path nodes from {render(f)}")
        redexes = find_redexes(path.final, rs)
        if not redexes:
            finished.append(path)
            continue
        for redex in reversed(redexes):
            step, node = _step(path.final, redex)
            stack.append(path.extend(step, node))
    logger.debug(f"{len(finished)} maximal paths, {visited} path nodes")
    return finished


# Supplementary non-modular step

EXISTS_FINISH = (parse_schema("~~exists x. ~~A"), parse_schema("~forall x. ~A"))


def rewrite_everywhere(f: Formula, lhs: Formula, rhs: Formula) -> Formula:
    """Apply a schema outermost first until it no longer matches."""
    while True:
        for pos in positions(f):
            m = match(lhs, subformula_at(f, pos))
            if m is not None:
                f = replace_at(f, pos, instantiate(rhs, m))
                break
        else:
            return f


def r3_exists_finish(f: Formula) -> Formula:
    """The r3 result with double negations also pushed through existentials."""
    return rewrite_everywhere(longest_result(f, builtin_ruleset("r3")), *EXISTS_FINISH)


# Validation and maximality


class Validity(Enum):
    VALID = "valid"
    INVALID = "invalid"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class RuleValidity:
    rule: RewriteRule
    status: Validity
    reason: str = ""
    decision: Optional[Decision] = field(default=None, compare=False)

    @property
    def witness(self):
        return None if self.decision is None else self.decision.witness

    @property
    def curated(self) -> Optional[CuratedEntry]:
        return self.witness if isinstance(self.witness, CuratedEntry) else None

    @property
    def countermodel(self) -> Optional[Countermodel]:
        return self.witness if isinstance(self.witness, Countermodel) else None


def validate_rule(
    rule: RewriteRule, kernel: Optional[Kernel] = None, logic: Logic = Logic.INTUITIONISTIC
) -> RuleValidity:
    if not rule.decreases:
        return RuleValidity(
            rule,
            Validity.INVALID,
            f"right side has {rule.rhs_negations} negations, left side {rule.lhs_negations}",
        )
    kernel = kernel or Kernel()
    lhs, rhs = rule.instance()
    decision = combine(kernel.equivalent(lhs, rhs, logic, witness=True))
    if decision.is_proved:
        return RuleValidity(rule, Validity.VALID, decision=decision)
    if decision.is_refuted:
        return RuleValidity(rule, Validity.INVALID, "sides are not equivalent", decision)
    return RuleValidity(rule, Validity.UNKNOWN, decision.note, decision)


@dataclass(frozen=True)
class MaximalReport:
    sets: Tuple[RuleSet, ...]
    undecided: Tuple[RuleValidity, ...]
    ties: Tuple[Tuple[RewriteRule, ...], ...]
    checked: int

    def as_record(self) -> Dict[str, object]:
        return {
            "sets": [dump_ruleset(rs).splitlines() for rs in self.sets],
            "undecided": [
                {"rule": str(v.rule), "status": v.reason} for v in self.undecided
            ],
            "ties": [[str(r) for r in tie] for tie in self.ties],
            "checked": self.checked,
        }


def enumerate_maximal(
    kernel: Optional[Kernel] = None, logic: Logic = Logic.INTUITIONISTIC
) -> MaximalReport:
    """Search the whole schema space for maximal simplifications.

    Candidates whose validity stays unknown are treated as invalid and
    reported together with the curated entry that accounts for them.
    """
    kernel = kernel or Kernel()
    sets, undecided, ties = [], [], []
    checked = 0
    for side, n in itertools.product(Side, (2, 1)):
        chosen = []
        for symbol in SYMBOL_ORDER:
            valid = []
            for rule in all_rules(side, n, symbol):
                if not rule.decreases:
                    continue
                checked += 1
                verdict = validate_rule(rule, kernel, logic)
                if verdict.status is Validity.VALID:
                    valid.append(rule)
                elif verdict.status is Validity.UNKNOWN:
                    undecided.append(verdict)
            if not valid:
                continue
            fewest = min(r.rhs_negations for r in valid)
            best = [r for r in valid if r.rhs_negations == fewest]
            if len(best) > 1:
                ties.append(tuple(best))
            chosen.append(best[0])
        sets.append(RuleSet(f"maximal_{side.value}_{n}", side, n, tuple(chosen)))
        logger.info(f"{side.value} N={n}: {len(chosen)} rules chosen")
    return MaximalReport(tuple(sets), tuple(undecided), tuple(ties), checked)


def survey(kernel: Optional[Kernel] = None) -> Dict[str, RuleValidity]:
    """Validity of every rule of r1 to r4."""
    kernel = kernel or Kernel()
    return {
        f"{name}:{rule.symbol.value}": validate_rule(rule, kernel)
        for name in MAXIMAL_NAMES
        for rule in builtin_ruleset(name).rules
    }
