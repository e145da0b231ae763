"""Seeded random formulas for the property checks."""

import random
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from negtrans.formula import (
    And,
    Atom,
    BOT,
    Exists,
    Forall,
    Formula,
    Imp,
    Neg,
    Or,
    Var,
    count_connectives,
)


@dataclass(frozen=True)
class GeneratorConfig:
    """Same seed, same list."""

    seed: int = 1
    max_depth: int = 4
    weights: Dict[str, int] = field(
        default_factory=lambda: {"and": 3, "or": 3, "imp": 3, "neg": 0}
    )
    atoms: Tuple[str, ...] = ("P", "Q", "R")
    predicates: Tuple[Tuple[str, int], ...] = (("P", 1), ("Q", 1), ("S", 0))
    quantifier_prob: float = 0.3
    leaf_prob: float = 0.25
    bot_prob: float = 0.0
    propositional: bool = True


_BINARY = {"and": And, "or": Or, "imp": Imp}


class _Generator:
    def __init__(self, cfg: GeneratorConfig):
        self.cfg = cfg
        self.rng = random.Random(cfg.seed)
        self.choices = [name for name, w in sorted(cfg.weights.items()) for _ in range(w)]

    def leaf(self, bound: Tuple[str, ...]) -> Formula:
        cfg, rng = self.cfg, self.rng
        if cfg.bot_prob and rng.random() < cfg.bot_prob:
            return BOT
        if cfg.propositional:
            return Atom(rng.choice(cfg.atoms))
        usable = [p for p in cfg.predicates if p[1] == 0 or bound]
        name, arity = rng.choice(usable)
        return Atom(name, tuple(Var(rng.choice(bound)) for _ in range(arity)))

    def formula(self, depth: int, bound: Tuple[str, ...] = ()) -> Formula:
        cfg, rng = self.cfg, self.rng
        if depth <= 0 or (depth < cfg.max_depth and rng.random() < cfg.leaf_prob):
            return self.leaf(bound)
        if not cfg.propositional and cfg.quantifier_prob and rng.random() < cfg.quantifier_prob:
            var = f"x{len(bound)}"
            kind = rng.choice((Forall, Exists))
            return kind(var, self.formula(depth - 1, bound + (var,)))
        if not self.choices:
            return self.leaf(bound)
        choice = rng.choice(self.choices)
        if choice == "neg":
            return Neg(self.formula(depth - 1, bound))
        return _BINARY[choice](self.formula(depth - 1, bound), self.formula(depth - 1, bound))


def gen_formulas(cfg: GeneratorConfig, n: int) -> List[Formula]:
    """``n`` formulas; closed whenever quantifiers are enabled."""
    gen = _Generator(cfg)
    return [gen.formula(cfg.max_depth) for _ in range(n)]


def symbol_count(f: Formula) -> int:
    return count_connectives(f).total
