"""Tests for the propositional deciders and the bounded first-order search."""

import pytest
from hypothesis import given, settings

from negtrans.errors import QuantifiedInputError
from negtrans.formula import Bot, subformulas
from negtrans.parser import parse
from negtrans.proofsearch import (
    Logic,
    Verdict,
    glivenko_check,
    minimal_form,
    prove_cpc,
    prove_fo_bounded,
    prove_ipc,
    prove_minimal,
)

from strategies import propositional


@pytest.mark.unit
class TestPropositional:
    """Classical, intuitionistic and minimal decisions."""

    @pytest.mark.parametrize(
        "text,cpc,ipc,ml",
        [
            ("P -> P", True, True, True),
            ("P | ~P", True, False, False),
            ("~~P -> P", True, False, False),
            ("((P -> Q) -> P) -> P", True, False, False),
            ("~~(P | ~P)", True, True, True),
            ("bot -> P", True, True, False),
            ("~P -> P -> Q", True, True, False),
            ("(P -> Q) | (Q -> P)", True, False, False),
            ("~~(~~P -> ~~Q) -> ~~(P -> Q)", True, True, False),
            ("~~(~~P & ~~Q) -> ~~(P & Q)", True, True, True),
            ("P & ~P", False, False, False),
        ],
    )
    def test_decisions(self, text, cpc, ipc, ml):
        f = parse(text)
        assert prove_cpc(f).is_proved == cpc
        assert prove_ipc(f).is_proved == ipc
        assert prove_minimal(f).is_proved == ml

    def test_refuted_is_a_verdict(self):
        assert prove_ipc(parse("P | ~P")).verdict is Verdict.REFUTED

    def test_minimal_form_replaces_falsum(self):
        f = minimal_form(parse("~P"))
        assert not any(isinstance(node, Bot) for node in subformulas(f))
        assert f.right.pred.startswith("_bot")

    def test_quantified_input_rejected(self):
        with pytest.raises(QuantifiedInputError):
            prove_ipc(parse("forall x. P(x)"))

    @settings(max_examples=150, deadline=None)
    @given(propositional(max_leaves=8))
    def test_glivenko(self, f):
        assert glivenko_check(f)

    @settings(max_examples=150, deadline=None)
    @given(propositional(max_leaves=8))
    def test_logics_are_nested(self, f):
        if prove_minimal(f).is_proved:
            assert prove_ipc(f).is_proved
        if prove_ipc(f).is_proved:
            assert prove_cpc(f).is_proved


@pytest.mark.unit
class TestFirstOrder:
    """Bounded search proves, and otherwise stays Unknown."""

    @pytest.mark.parametrize(
        "text",
        [
            "(forall x. P(x)) -> exists x. P(x)",
            "(~~exists x. ~~P(x)) -> ~~exists x. P(x)",
            "(~~forall x. ~P(x)) -> ~exists x. P(x)",
            "(~exists x. P(x)) -> forall x. ~P(x)",
            "(~~forall x. ~~P(x)) -> forall x. ~~P(x)",
            "(exists x. ~P(x)) -> ~forall x. P(x)",
        ],
    )
    def test_intuitionistic_proofs(self, text):
        decision = prove_fo_bounded(parse(text), Logic.INTUITIONISTIC)
        assert decision.is_proved
        assert decision.depth is not None and decision.depth <= 12

    def test_classical_only(self):
        f = parse("(~forall x. P(x)) -> exists x. ~P(x)")
        assert prove_fo_bounded(f, Logic.CLASSICAL).is_proved
        assert prove_fo_bounded(f, Logic.INTUITIONISTIC, depth=6, node_budget=3000).is_unknown

    def test_never_refutes(self):
        decision = prove_fo_bounded(parse("exists x. P(x)"), depth=4, node_budget=500)
        assert decision.verdict is Verdict.UNKNOWN
