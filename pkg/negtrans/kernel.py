"""The prover handle shared by rule validation, the ∼ check and the checks.

Propositional questions go to the complete deciders. Quantified ones run the
bounded proof search first, then the bounded countermodel search, and only
then consult the curated table of schemas that hold on every finite frame.
"""

import logging
from dataclasses import replace
from typing import Dict, Optional, Tuple

from negtrans.formula import Formula, Imp, is_propositional
from negtrans.kripke import (
    Countermodel,
    SearchBounds,
    curated_entry,
    find_countermodel,
    one_world_bounds,
)
from negtrans.proofsearch import (
    DEFAULT_FO_DEPTH,
    DEFAULT_NODE_BUDGET,
    Decision,
    Logic,
    Verdict,
    decide_propositional,
    minimal_form,
    prove_fo_bounded,
)

logger = logging.getLogger(__name__)


class Kernel:
    """Decides provability with a per-instance memo table."""

    def __init__(
        self,
        bounds: Optional[SearchBounds] = None,
        depth: int = DEFAULT_FO_DEPTH,
        node_budget: int = DEFAULT_NODE_BUDGET,
    ):
        self.bounds = bounds or SearchBounds()
        self.depth = depth
        self.node_budget = node_budget
        self._memo: Dict[Tuple[Formula, Logic], Decision] = {}

    @classmethod
    def from_config(cls, config) -> "Kernel":
        return cls(config.search_bounds(), config.FO_DEPTH, config.FO_NODE_BUDGET)

    def decide(
        self, f: Formula, logic: Logic = Logic.INTUITIONISTIC, witness: bool = False
    ) -> Decision:
        """With ``witness``, a Refuted verdict from a decider also gets a countermodel."""
        key = (f, logic)
        if key not in self._memo:
            self._memo[key] = self._decide(f, logic)
        decision = self._memo[key]
        if witness and decision.is_refuted and decision.witness is None:
            model = self.refute(f, logic)
            if model is not None:
                decision = replace(decision, witness=model)
                self._memo[key] = decision
        return decision

    def _decide(self, f: Formula, logic: Logic) -> Decision:
        if is_propositional(f):
            return decide_propositional(f, logic)

        proved = prove_fo_bounded(f, logic, self.depth, self.node_budget)
        if proved.is_proved:
            return proved

        model = self.refute(f, logic)
        if model is not None:
            return Decision(Verdict.REFUTED, note="countermodel", witness=model)

        if logic is not Logic.CLASSICAL:
            entry = curated_entry(f)
            if entry is not None:
                logger.info(f"Curated table entry '{entry.key}' matched")
                return Decision(Verdict.UNKNOWN, note=entry.status, witness=entry)
        return proved

    def refute(self, f: Formula, logic: Logic = Logic.INTUITIONISTIC) -> Optional[Countermodel]:
        """Bounded countermodel search; classical models are the one-world ones."""
        if logic is Logic.CLASSICAL:
            return find_countermodel(f, one_world_bounds(self.bounds))
        if logic is Logic.MINIMAL:
            found = find_countermodel(minimal_form(f), self.bounds)
            return None if found is None else Countermodel(found.model, found.world, f, found.env)
        return find_countermodel(f, self.bounds)

    def proves(self, f: Formula, logic: Logic = Logic.INTUITIONISTIC) -> bool:
        return self.decide(f, logic).is_proved

    def equivalent(
        self,
        a: Formula,
        b: Formula,
        logic: Logic = Logic.INTUITIONISTIC,
        witness: bool = False,
    ) -> Tuple[Decision, Decision]:
        """Decisions for ``a -> b`` and ``b -> a``."""
        return (
            self.decide(Imp(a, b), logic, witness),
            self.decide(Imp(b, a), logic, witness),
        )


def combine(decisions) -> Decision:
    """Worst verdict: any Refuted wins, then any Unknown, else Proved."""
    decisions = list(decisions)
    for verdict in (Verdict.REFUTED, Verdict.UNKNOWN):
        for d in decisions:
            if d.verdict is verdict:
                return d
    return decisions[0] if decisions else Decision(Verdict.PROVED)
