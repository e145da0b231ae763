"""Translations parametrized by a one-hole context ``T``.

``~~`` is one instance; the Friedman and Peirce contexts are the others. Each
variant clause table is the corresponding ``~~`` table with every double
negation replaced by ``T``.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional, Tuple

from negtrans.errors import NegtransError
from negtrans.formula import (
    And,
    Exists,
    Forall,
    Formula,
    Imp,
    Meta,
    Neg,
    Or,
    atom,
    fill,
    free_vars,
)
from negtrans.parser import render
from negtrans.translations import TranslationSpec, apply_translation

logger = logging.getLogger(__name__)

_A = Meta("A")
_B = Meta("B")


class MonadKind(Enum):
    DOUBLE_NEG = "double_neg"
    FRIEDMAN = "friedman"
    PEIRCE_NEG = "peirce_neg"
    PEIRCE_R = "peirce_r"


@dataclass(frozen=True)
class MonadDescriptor:
    kind: MonadKind
    target: Optional[Formula] = None

    def __post_init__(self):
        needs_target = self.kind in (MonadKind.FRIEDMAN, MonadKind.PEIRCE_R)
        if needs_target and self.target is None:
            raise NegtransError(f"{self.kind.value} monad needs a target formula")
        if self.target is not None and free_vars(self.target):
            raise NegtransError(
                f"monad target {render(self.target)} must be closed"
            )

    @property
    def name(self) -> str:
        if self.target is None:
            return self.kind.value
        return f"{self.kind.value}[{render(self.target)}]"

    def context(self) -> Formula:
        """The schema ``T(A)``."""
        if self.kind is MonadKind.DOUBLE_NEG:
            return Neg(Neg(_A))
        if self.kind is MonadKind.FRIEDMAN:
            return Imp(Imp(_A, self.target), self.target)
        if self.kind is MonadKind.PEIRCE_NEG:
            return Imp(Neg(_A), _A)
        return Imp(Imp(_A, self.target), _A)

    @property
    def is_linear(self) -> bool:
        return self.kind is not MonadKind.PEIRCE_NEG and self.kind is not MonadKind.PEIRCE_R

    def apply(self, f: Formula) -> Formula:
        return fill(self.context(), {"A": f})


def double_neg() -> MonadDescriptor:
    return MonadDescriptor(MonadKind.DOUBLE_NEG)


def friedman(target: Formula) -> MonadDescriptor:
    return MonadDescriptor(MonadKind.FRIEDMAN, target)


def peirce_neg() -> MonadDescriptor:
    return MonadDescriptor(MonadKind.PEIRCE_NEG)


def peirce_r(target: Formula) -> MonadDescriptor:
    return MonadDescriptor(MonadKind.PEIRCE_R, target)


def standard_monads(target_name: str = "R0") -> Tuple[MonadDescriptor, ...]:
    """One descriptor of each kind, targets a fresh 0-ary atom."""
    target = atom(target_name)
    return (double_neg(), friedman(target), peirce_neg(), peirce_r(target))


class MonadVariant(Enum):
    KOLMOGOROV = "kolmogorov_T"
    KURODA_ML = "kuroda_ml_T"
    GOEDEL_GENTZEN = "goedel_gentzen_T"


def _quantified(kind, body: Formula) -> Formula:
    return kind("x", body)


def monadic_spec(monad: MonadDescriptor, variant: MonadVariant) -> TranslationSpec:
    t = monad.apply
    if variant is MonadVariant.KOLMOGOROV:
        clauses = dict(
            atom=t(_A),
            and_=t(And(_A, _B)),
            or_=t(Or(_A, _B)),
            imp=t(Imp(_A, _B)),
            forall=t(_quantified(Forall, _A)),
            exists=t(_quantified(Exists, _A)),
            wrapper=_A,
        )
    elif variant is MonadVariant.KURODA_ML:
        clauses = dict(
            atom=_A,
            and_=And(_A, _B),
            or_=Or(_A, _B),
            imp=Imp(_A, t(_B)),
            forall=_quantified(Forall, t(_A)),
            exists=_quantified(Exists, _A),
            wrapper=t(_A),
        )
    else:
        clauses = dict(
            atom=t(_A),
            and_=And(_A, _B),
            or_=t(Or(_A, _B)),
            imp=Imp(_A, _B),
            forall=_quantified(Forall, _A),
            exists=t(_quantified(Exists, _A)),
            wrapper=_A,
        )
    return TranslationSpec(
        name=f"{variant.value}[{monad.name}]", linear=monad.is_linear, **clauses
    )


def monadic_translation(monad: MonadDescriptor, variant: MonadVariant, f: Formula) -> Formula:
    return apply_translation(monadic_spec(monad, variant), f)


def monadic_rule_schemas(monad: MonadDescriptor) -> Dict[str, Tuple[Formula, Formula]]:
    """The inside ``~~`` rules for minimal logic and the outside ones, with ``~~`` read as ``T``."""
    t = monad.apply
    return {
        "inside-and": (t(And(t(_A), t(_B))), t(And(_A, _B))),
        "inside-or": (t(Or(t(_A), t(_B))), t(Or(_A, _B))),
        "inside-imp": (t(Imp(t(_A), t(_B))), t(Imp(_A, t(_B)))),
        "inside-exists": (t(_quantified(Exists, t(_A))), t(_quantified(Exists, _A))),
        "outside-and": (t(And(t(_A), t(_B))), And(t(_A), t(_B))),
        "outside-imp": (t(Imp(t(_A), t(_B))), Imp(t(_A), t(_B))),
        "outside-forall": (t(_quantified(Forall, t(_A))), _quantified(Forall, t(_A))),
    }
