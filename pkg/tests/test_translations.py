"""Tests for the negative translations."""

import pytest
from hypothesis import given, settings

from negtrans.errors import NegtransError, UnknownTranslationError
from negtrans.formula import Meta, Neg, dneg, expand_neg
from negtrans.parser import parse, render
from negtrans.proofsearch import prove_cpc, prove_ipc
from negtrans.translations import (
    SOUND_TRANSLATIONS,
    TRANSLATIONS,
    BotMode,
    TranslationSpec,
    apply_translation,
    builtin,
    translate,
    translations_related,
    with_bot_mode,
)

from strategies import propositional


@pytest.mark.unit
class TestClauses:
    """Outputs of the built-in clause tables."""

    @pytest.mark.parametrize(
        "name,source,expected",
        [
            ("kolmogorov", "P & Q", "~~(~~P & ~~Q)"),
            ("kolmogorov", "forall x. P(x)", "~~forall x. ~~P(x)"),
            ("goedel_gentzen", "P | Q", "~~(~~P | ~~Q)"),
            ("goedel_gentzen", "P -> Q", "~~P -> ~~Q"),
            ("goedel", "P -> Q", "~(~~P & ~~~Q)"),
            ("goedel_nn", "P -> Q", "~~(~~P -> ~~Q)"),
            ("gentzen_original", "exists x. P(x)", "~forall x. ~~~P(x)"),
            ("kuroda", "forall x. P(x)", "~~forall x. ~~P(x)"),
            ("kuroda", "P | Q -> R", "~~(P | Q -> R)"),
            ("kuroda_ml", "P -> Q", "~~(P -> ~~Q)"),
            ("krivine", "P -> Q", "~(~~P & ~Q)"),
            ("krivine", "exists x. P(x)", "~~exists x. ~~P(x)"),
            ("g", "P | Q", "~~~P -> ~~Q"),
            ("em", "P & Q", "~(~~P -> ~Q)"),
            ("aczel", "P & Q", "~~(~~P & ~~Q)"),
        ],
    )
    def test_translation(self, name, source, expected):
        assert render(translate(name, parse(source))) == expected

    def test_negation_is_expanded_first(self):
        assert render(translate("kolmogorov", parse("~P"))) == "~~(~~P -> ~~bot)"

    def test_literal_falsum(self):
        spec = with_bot_mode(builtin("kolmogorov"), BotMode.LITERAL)
        assert render(translate_with(spec, "~P")) == "~~(~~P -> bot)"

    def test_literal_falsum_dual_translations(self):
        spec = with_bot_mode(builtin("krivine"), BotMode.LITERAL)
        assert render(translate_with(spec, "~P")) == "~(~~P & top)"

    def test_describe(self):
        table = builtin("kuroda").describe()
        assert table["forall"] == "forall x. ~~A"
        assert table["wrapper"] == "~~A"
        assert table["bot"] == "bot"

    def test_unknown_name_lists_options(self):
        with pytest.raises(UnknownTranslationError) as info:
            builtin("glivenko")
        assert "kuroda" in str(info.value)

    def test_clause_must_use_each_hole_once(self):
        table = builtin("kolmogorov")
        with pytest.raises(NegtransError):
            TranslationSpec(
                name="broken",
                and_=Neg(Meta("A")),
                or_=table.or_,
                imp=table.imp,
                forall=table.forall,
                exists=table.exists,
                atom=table.atom,
                wrapper=table.wrapper,
            )


def translate_with(spec, text):
    return apply_translation(spec, parse(text))


@pytest.mark.unit
class TestSoundness:
    """Classical provability is preserved and reflected."""

    @settings(max_examples=60, deadline=None)
    @given(propositional(max_leaves=7))
    def test_round_trip(self, f):
        classical = prove_cpc(f).is_proved
        for name in SOUND_TRANSLATIONS:
            assert prove_ipc(translate(name, f)).is_proved == classical

    @settings(max_examples=30, deadline=None)
    @given(formula=propositional(max_leaves=6))
    def test_translations_agree_intuitionistically(self, kernel, formula):
        reference = translate("kolmogorov", formula)
        for name in SOUND_TRANSLATIONS:
            forward, backward = kernel.equivalent(reference, translate(name, formula))
            assert forward.is_proved and backward.is_proved

    @settings(max_examples=60, deadline=None)
    @given(propositional(max_leaves=8))
    def test_kuroda_is_double_negation_on_propositions(self, f):
        assert translate("kuroda", f) == dneg(expand_neg(f))


@pytest.mark.integration
class TestRelation:
    """Clause-by-clause equivalence of translations."""

    @pytest.mark.parametrize(
        "first,second",
        [("gentzen_original", "goedel_gentzen"), ("goedel", "goedel_nn")],
    )
    def test_related(self, kernel, first, second):
        assert translations_related(builtin(first), builtin(second), kernel).related

    def test_not_related(self, kernel):
        relation = translations_related(builtin("goedel_gentzen"), builtin("kuroda"), kernel)
        assert not relation.related
        assert relation.as_record()["clauses"]["atom"]["verdict"] == "refuted"

    @pytest.mark.parametrize("name", sorted(TRANSLATIONS))
    def test_bot_toggle(self, kernel, name):
        spec = builtin(name)
        literal = with_bot_mode(spec, BotMode.LITERAL)
        assert translations_related(spec, literal, kernel).related
