"""Tests for the formula grammar."""

import pytest
from hypothesis import given, settings

from negtrans.errors import ArityError, FormulaSyntaxError
from negtrans.formula import BOT, TOP, And, Atom, Exists, Forall, Imp, Meta, Neg, Or, Var, atom
from negtrans.parser import parse, parse_schema, render

from strategies import propositional, quantified

P, Q, R = Atom("P"), Atom("Q"), Atom("R")


@pytest.mark.unit
class TestParse:
    """Precedence, associativity and binders."""

    @pytest.mark.parametrize(
        "text,expected",
        [
            ("P -> Q -> R", Imp(P, Imp(Q, R))),
            ("P & Q | R", Or(And(P, Q), R)),
            ("P | Q & R", Or(P, And(Q, R))),
            ("~P & Q", And(Neg(P), Q)),
            ("~~(P -> Q)", Neg(Neg(Imp(P, Q)))),
            ("bot -> top", Imp(BOT, TOP)),
            ("P -> forall x. Q(x) & R", Imp(P, Forall("x", And(atom("Q", "x"), R)))),
        ],
    )
    def test_precedence(self, text, expected):
        assert parse(text) == expected

    def test_quantifier_body_extends_right(self):
        f = parse("forall x. P(x) -> Q(x)")
        assert f == Forall("x", Imp(atom("P", "x"), atom("Q", "x")))

    def test_parenthesized_quantifier(self):
        f = parse("(forall x. P(x)) -> Q")
        assert f == Imp(Forall("x", atom("P", "x")), Q)

    def test_shadowed_binder_renamed(self):
        f = parse("forall x. exists x. P(x)")
        assert isinstance(f, Forall) and isinstance(f.body, Exists)
        assert f.body.var != "x"
        assert f.body.body == Atom("P", (Var(f.body.var),))

    def test_schema_metavariables(self):
        assert parse_schema("~~(A & B)") == Neg(Neg(And(Meta("A"), Meta("B"))))

    def test_syntax_error_position(self):
        with pytest.raises(FormulaSyntaxError) as info:
            parse("P & & Q")
        assert info.value.line == 1
        assert info.value.column == 5

    def test_syntax_error_at_end(self):
        with pytest.raises(FormulaSyntaxError) as info:
            parse("P &")
        assert info.value.line == 1

    def test_arity_mismatch(self):
        with pytest.raises(ArityError):
            parse("forall x. P(x) & P(x, x)")


@pytest.mark.unit
class TestRender:
    """Printing with minimal parentheses."""

    @pytest.mark.parametrize(
        "text",
        [
            "~~forall x. ~~P(x)",
            "~~(~~P & ~~exists x. ~~Q(x))",
            "(P -> Q) -> P",
            "(forall x. P(x)) -> Q",
            "~(forall x. P(x)) & Q",
            "P & (Q | R)",
        ],
    )
    def test_render_is_stable(self, text):
        assert render(parse(text)) == text

    @settings(max_examples=200, deadline=None)
    @given(propositional())
    def test_render_reparses_propositional(self, f):
        assert parse(render(f)) == f

    @settings(max_examples=200, deadline=None)
    @given(quantified())
    def test_render_reparses_quantified(self, f):
        assert parse(render(f)) == f
