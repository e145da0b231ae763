"""Finite first-order Kripke models and bounded countermodel search."""

import itertools
import logging
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Any, Dict, FrozenSet, Iterator, List, Mapping, Optional, Set, Tuple

from negtrans.errors import ConfigError, UnboundVariableError, UnsupportedTermError
from negtrans.formula import (
    And,
    Atom,
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
    children,
    expand_neg,
    free_vars,
    is_propositional,
    predicate_arities,
    substitute,
    with_children,
)
from negtrans.parser import parse, render

logger = logging.getLogger(__name__)

Fact = Tuple[int, str, Tuple[int, ...]]


@dataclass(frozen=True)
class KripkeModel:
    """Worlds are ``0..n-1``; world 0 is the root of every enumerated model."""

    worlds: Tuple[int, ...]
    order: FrozenSet[Tuple[int, int]]
    domains: Tuple[FrozenSet[int], ...]
    valuation: FrozenSet[Fact]

    @cached_property
    def above(self) -> Dict[int, Tuple[int, ...]]:
        return {
            w: tuple(v for v in self.worlds if (w, v) in self.order)
            for w in self.worlds
        }

    def true_facts(self, world: int) -> List[Fact]:
        return sorted(fact for fact in self.valuation if fact[0] == world)


@dataclass(frozen=True)
class SearchBounds:
    max_worlds: int = 3
    max_domain: int = 2
    catalog: str = "catalog"
    constant_domains: bool = False
    max_models: int = 500000

    def __post_init__(self):
        if self.max_worlds < 1 or self.max_domain < 1 or self.max_models < 1:
            raise ConfigError("search bounds must be positive")
        if self.catalog not in ("catalog", "all"):
            raise ConfigError(f"unknown frame catalog '{self.catalog}'; valid options: all, catalog")


@dataclass(frozen=True)
class Countermodel:
    model: KripkeModel
    world: int
    formula: Formula
    env: Tuple[Tuple[str, int], ...] = ()

    def diagram(self) -> str:
        """Worlds, strict order edges, domains and true atoms per world."""
        m = self.model
        edges = sorted((a, b) for a, b in m.order if a != b)
        lines = [
            f"worlds: {', '.join(f'w{w}' for w in m.worlds)}",
            "order: " + (", ".join(f"w{a} < w{b}" for a, b in edges) or "(none)"),
            "domains: "
            + "; ".join(
                f"w{w} {{{', '.join(str(d) for d in sorted(m.domains[w]))}}}"
                for w in m.worlds
            ),
        ]
        for w in m.worlds:
            facts = [_fact_text(fact) for fact in m.true_facts(w)]
            lines.append(f"w{w}: {', '.join(facts) if facts else '-'}")
        lines.append(f"refutes at w{self.world}: {render(self.formula)}")
        return "\n".join(lines)

    def as_record(self) -> Dict[str, Any]:
        m = self.model
        return {
            "worlds": list(m.worlds),
            "order": [[a, b] for a, b in sorted(m.order) if a != b],
            "domains": {f"w{w}": sorted(m.domains[w]) for w in m.worlds},
            "true": {f"w{w}": [_fact_text(f) for f in m.true_facts(w)] for w in m.worlds},
            "world": self.world,
            "formula": render(self.formula),
        }


def _fact_text(fact: Fact) -> str:
    _, pred, args = fact
    if not args:
        return pred
    return f"{pred}({', '.join(str(a) for a in args)})"


# Forcing


class _Forcing:
    def __init__(self, model: KripkeModel):
        self.model = model
        self._memo: Dict[Tuple[int, Formula, FrozenSet[Tuple[str, int]]], bool] = {}

    def term(self, t: Term, env: Mapping[str, int]) -> int:
        if isinstance(t, Var):
            if t.name not in env:
                raise UnboundVariableError(f"variable '{t.name}' has no value")
            return env[t.name]
        raise UnsupportedTermError(f"function symbol '{t.fn}' has no interpretation")

    def forces(self, w: int, env: Mapping[str, int], f: Formula) -> bool:
        key = (w, f, frozenset(env.items()))
        known = self._memo.get(key)
        if known is None:
            known = self._forces(w, env, f)
            self._memo[key] = known
        return known

    def _forces(self, w: int, env: Mapping[str, int], f: Formula) -> bool:
        m = self.model
        if isinstance(f, Atom):
            args = tuple(self.term(a, env) for a in f.args)
            return (w, f.pred, args) in m.valuation
        if isinstance(f, Bot):
            return False
        if isinstance(f, Top):
            return True
        if isinstance(f, And):
            return self.forces(w, env, f.left) and self.forces(w, env, f.right)
        if isinstance(f, Or):
            return self.forces(w, env, f.left) or self.forces(w, env, f.right)
        if isinstance(f, Neg):
            return all(not self.forces(v, env, f.body) for v in m.above[w])
        if isinstance(f, Imp):
            return all(
                not self.forces(v, env, f.left) or self.forces(v, env, f.right)
                for v in m.above[w]
            )
        if isinstance(f, Forall):
            return all(
                self.forces(v, {**env, f.var: d}, f.body)
                for v in m.above[w]
                for d in sorted(m.domains[v])
            )
        if isinstance(f, Exists):
            return any(
                self.forces(w, {**env, f.var: d}, f.body) for d in sorted(m.domains[w])
            )
        raise TypeError(f"cannot force {type(f).__name__}")


def forces(model: KripkeModel, world: int, env: Mapping[str, int], f: Formula) -> bool:
    return _Forcing(model).forces(world, dict(env), f)


def check_monotone(model: KripkeModel) -> bool:
    """Preorder, monotone domains, monotone valuation, facts within domains."""
    worlds = set(model.worlds)
    order = model.order
    if any(a not in worlds or b not in worlds for a, b in order):
        return False
    if any((w, w) not in order for w in worlds):
        return False
    for a, b in order:
        for c in worlds:
            if (b, c) in order and (a, c) not in order:
                return False
        if not model.domains[a] <= model.domains[b]:
            return False
    for w, pred, args in model.valuation:
        if not set(args) <= model.domains[w]:
            return False
        for a, b in order:
            if a == w and (b, pred, args) not in model.valuation:
                return False
    return True


def forcing_is_monotone(model: KripkeModel, f: Formula) -> bool:
    """Checks persistence of a closed formula along the order."""
    evaluator = _Forcing(model)
    for a, b in model.order:
        if evaluator.forces(a, {}, f) and not evaluator.forces(b, {}, f):
            return False
    return True


# Frames


Frame = Tuple[int, FrozenSet[Tuple[int, int]]]


def _closure(n: int, edges: Set[Tuple[int, int]]) -> FrozenSet[Tuple[int, int]]:
    rel = set(edges) | {(w, w) for w in range(n)}
    changed = True
    while changed:
        changed = False
        for a, b in list(rel):
            for c, d in list(rel):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
    return frozenset(rel)


def chain(n: int) -> Frame:
    return n, _closure(n, {(i, i + 1) for i in range(n - 1)})


def fork(leaves: int) -> Frame:
    return leaves + 1, _closure(leaves + 1, {(0, j) for j in range(1, leaves + 1)})


def diamond() -> Frame:
    return 4, _closure(4, {(0, 1), (0, 2), (1, 3), (2, 3)})


def _catalog_frames(max_worlds: int) -> List[Frame]:
    frames = [chain(n) for n in range(1, min(max_worlds, 4) + 1)]
    frames += [fork(k) for k in range(2, max_worlds)]
    if max_worlds >= 4:
        frames.append(diamond())
    return sorted(frames, key=lambda fr: fr[0])


def _canonical(frame: Frame) -> Tuple[Tuple[int, int], ...]:
    n, order = frame
    best = None
    for perm in itertools.permutations(range(1, n)):
        mapping = (0,) + perm
        image = tuple(sorted((mapping[a], mapping[b]) for a, b in order))
        if best is None or image < best:
            best = image
    return best


def _all_rooted_frames(max_worlds: int) -> List[Frame]:
    frames: List[Frame] = []
    seen = set()
    for n in range(1, max_worlds + 1):
        pairs = [(i, j) for i in range(1, n) for j in range(i + 1, n)]
        for bits in range(2 ** len(pairs)):
            edges = {p for k, p in enumerate(pairs) if bits >> k & 1}
            edges |= {(0, j) for j in range(1, n)}
            order = _closure(n, edges)
            if frozenset(edges | {(w, w) for w in range(n)}) != order:
                continue
            canon = _canonical((n, order))
            if canon in seen:
                continue
            seen.add(canon)
            frames.append((n, order))
    return frames


def frames(bounds: SearchBounds) -> List[Frame]:
    if bounds.catalog == "all":
        return _all_rooted_frames(bounds.max_worlds)
    return _catalog_frames(bounds.max_worlds)


def _up_sets(frame: Frame) -> List[FrozenSet[int]]:
    n, order = frame
    result = []
    for bits in range(2 ** n):
        members = {w for w in range(n) if bits >> w & 1}
        if all(b in members for a, b in order if a in members):
            result.append(frozenset(members))
    return sorted(result, key=lambda s: (len(s), sorted(s)))


def _domain_sizes(frame: Frame, max_domain: int, constant: bool) -> Iterator[Tuple[int, ...]]:
    n, order = frame
    if constant:
        for k in range(1, max_domain + 1):
            yield (k,) * n
        return
    for sizes in itertools.product(range(1, max_domain + 1), repeat=n):
        if all(sizes[a] <= sizes[b] for a, b in order):
            yield sizes


def iter_models(
    predicates: Mapping[str, int], bounds: SearchBounds, first_order: bool = True
) -> Iterator[KripkeModel]:
    """Every monotone model over the bounded frames, in a fixed order."""
    max_domain = bounds.max_domain if first_order else 1
    count = 0
    for frame in frames(bounds):
        n, order = frame
        ups = _up_sets(frame)
        for sizes in _domain_sizes(frame, max_domain, bounds.constant_domains):
            domains = tuple(frozenset(range(k)) for k in sizes)
            instances = []
            for pred in sorted(predicates):
                for args in itertools.product(range(max(sizes)), repeat=predicates[pred]):
                    allowed = frozenset(w for w in range(n) if all(a < sizes[w] for a in args))
                    instances.append(((pred, args), [u for u in ups if u <= allowed]))
            for choice in itertools.product(*(options for _, options in instances)):
                facts = frozenset(
                    (w, pred, args)
                    for ((pred, args), _), worlds in zip(instances, choice)
                    for w in worlds
                )
                count += 1
                if count > bounds.max_models:
                    logger.warning(f"Model budget {bounds.max_models} exhausted")
                    return
                yield KripkeModel(tuple(range(n)), order, domains, facts)


def find_countermodel(f: Formula, bounds: Optional[SearchBounds] = None) -> Optional[Countermodel]:
    """First model (in enumeration order) whose root does not force ``f``."""
    bounds = bounds or SearchBounds()
    target = expand_neg(f)
    arities = {name: min(a) for name, a in predicate_arities(target).items()}
    free = sorted(free_vars(target))
    first_order = not is_propositional(target) or bool(free)
    env = {name: 0 for name in free}
    for model in iter_models(arities, bounds, first_order):
        if not forces(model, 0, env, target):
            logger.debug(f"Countermodel with {len(model.worlds)} worlds found")
            return Countermodel(model, 0, f, tuple(sorted(env.items())))
    return None


def one_world_bounds(bounds: SearchBounds) -> SearchBounds:
    return replace(bounds, max_worlds=1)


# Curated refutations


@dataclass(frozen=True)
class CuratedEntry:
    """A schema that is not intuitionistically valid but holds on every finite frame."""

    key: str
    formula: Formula
    status: str
    argument: str = field(default="", compare=False)


FINITE_FRAME_STATUS = "infinite-countermodel; not machine-refuted"

_FINITE_ARGUMENT = (
    "every finite frame has maximal worlds above each world, forcing is classical "
    "there, so the schema holds on all finite frames; refutation needs an "
    "infinite chain of worlds with growing domains"
)

CURATED_REFUTATIONS: Tuple[CuratedEntry, ...] = (
    CuratedEntry(
        "dn-shift",
        parse("(~~forall x. ~~P(x)) -> ~~forall x. P(x)"),
        FINITE_FRAME_STATUS,
        _FINITE_ARGUMENT,
    ),
    CuratedEntry(
        "dn-shift-dual",
        parse("(~forall x. P(x)) -> ~~exists x. ~P(x)"),
        FINITE_FRAME_STATUS,
        _FINITE_ARGUMENT,
    ),
)


def alpha_normal(f: Formula, depth: int = 0) -> Formula:
    """Renames binders to ``_v0, _v1, ...`` by nesting depth."""
    if isinstance(f, Quantifier):
        name = f"_v{depth}"
        body = substitute(f.body, f.var, Var(name)) if name != f.var else f.body
        return replace(f, var=name, body=alpha_normal(body, depth + 1))
    kids = children(f)
    if not kids:
        return f
    return with_children(f, tuple(alpha_normal(k, depth) for k in kids))


def curated_entry(f: Formula) -> Optional[CuratedEntry]:
    target = alpha_normal(expand_neg(f))
    for entry in CURATED_REFUTATIONS:
        if alpha_normal(expand_neg(entry.formula)) == target:
            return entry
    return None
