"""Tests for the formula core."""

import pytest

from negtrans.formula import (
    BOT,
    And,
    Atom,
    Exists,
    Forall,
    Imp,
    Meta,
    Neg,
    Or,
    Symbol,
    Var,
    atom,
    count_connectives,
    dneg,
    expand_neg,
    fill,
    free_vars,
    negation_count,
    neg,
    positions,
    replace_at,
    subformula_at,
    substitute,
    untagged,
)

P, Q = Atom("P"), Atom("Q")


@pytest.mark.unit
class TestConstruction:
    """Node construction and equality."""

    def test_neg_times(self):
        assert neg(P, 3) == Neg(Neg(Neg(P)))
        assert dneg(P) == neg(P, 2)

    def test_tags_do_not_affect_equality(self):
        assert And(P, Q, tag=1) == And(P, Q, tag=2) == And(P, Q)
        assert hash(And(P, Q, tag=7)) == hash(And(P, Q))
        assert Forall("x", atom("P", "x"), tag=3) == Forall("x", atom("P", "x"))

    def test_different_connectives_differ(self):
        assert And(P, Q) != Or(P, Q)
        assert Forall("x", atom("P", "x")) != Exists("x", atom("P", "x"))

    def test_untagged_strips_tags(self):
        tagged = Imp(And(P, Q, tag=1), P, tag=2)
        clean = untagged(tagged)
        assert clean == tagged
        assert clean.tag is None and clean.left.tag is None


@pytest.mark.unit
class TestTraversal:
    """Positions and replacement."""

    def test_pre_and_post_order(self):
        f = And(Neg(P), Q)
        assert list(positions(f, "pre")) == [(), (0,), (0, 0), (1,)]
        assert list(positions(f, "post")) == [(0, 0), (0,), (1,), ()]

    def test_subformula_and_replace(self):
        f = Imp(And(P, Q), P)
        assert subformula_at(f, (0, 1)) == Q
        assert replace_at(f, (0, 1), BOT) == Imp(And(P, BOT), P)
        assert replace_at(f, (), Q) == Q


@pytest.mark.unit
class TestCounting:
    """Connective and negation counts."""

    def test_counts_per_symbol(self):
        f = Forall("x", Imp(And(atom("P", "x"), Q), Exists("y", Or(atom("P", "y"), Q))))
        counts = count_connectives(f)
        assert counts[Symbol.AND] == 1
        assert counts[Symbol.OR] == 1
        assert counts[Symbol.IMP] == 1
        assert counts[Symbol.FORALL] == 1
        assert counts[Symbol.EXISTS] == 1
        assert counts.total == 5

    def test_negations_are_not_connectives(self):
        assert count_connectives(dneg(P)).total == 0
        assert negation_count(dneg(And(Neg(P), Q))) == 3

    def test_expand_neg_counts_as_implication(self):
        expanded = expand_neg(Neg(And(P, Neg(Q))))
        assert expanded == Imp(And(P, Imp(Q, BOT)), BOT)
        assert count_connectives(expanded)[Symbol.IMP] == 2


@pytest.mark.unit
class TestVariables:
    """Free variables and substitution."""

    def test_free_vars(self):
        f = And(atom("P", "x"), Forall("y", atom("P", "y")))
        assert free_vars(f) == {"x"}

    def test_substitution_avoids_capture(self):
        f = Forall("y", atom("R", "x", "y"))
        result = substitute(f, "x", Var("y"))
        assert isinstance(result, Forall)
        assert result.var != "y"
        assert free_vars(result) == {"y"}

    def test_bound_occurrence_untouched(self):
        f = Exists("x", atom("P", "x"))
        assert substitute(f, "x", Var("z")) == f


@pytest.mark.unit
class TestSchemas:
    """Filling metavariables."""

    def test_fill_holes(self):
        schema = Neg(Neg(And(Meta("A"), Neg(Meta("B")))))
        assert fill(schema, {"A": P, "B": Q}) == dneg(And(P, Neg(Q)))

    def test_fill_renames_placeholder_binder(self):
        schema = Forall("x", Neg(Neg(Meta("A"))))
        filled = fill(schema, {"A": atom("P", "z")}, var="z", tag=4)
        assert filled == Forall("z", dneg(atom("P", "z")))
        assert filled.tag == 4
