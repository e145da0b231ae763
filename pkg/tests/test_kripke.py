"""Tests for Kripke forcing and the bounded countermodel search."""

import itertools

import pytest

from negtrans.errors import ConfigError, UnboundVariableError
from negtrans.formula import atom
from negtrans.kripke import (
    CURATED_REFUTATIONS,
    FINITE_FRAME_STATUS,
    KripkeModel,
    SearchBounds,
    chain,
    check_monotone,
    curated_entry,
    find_countermodel,
    forces,
    forcing_is_monotone,
    fork,
    frames,
    iter_models,
)
from negtrans.parser import parse


def two_chain(facts, domains=({0}, {0})):
    n, order = chain(2)
    return KripkeModel(tuple(range(n)), order, tuple(frozenset(d) for d in domains), frozenset(facts))


@pytest.mark.unit
class TestForcing:
    """Forcing clauses on hand-built models."""

    def test_excluded_middle_fails_at_root(self):
        model = two_chain({(1, "P", ())})
        assert not forces(model, 0, {}, parse("P | ~P"))
        assert forces(model, 1, {}, parse("P | ~P"))

    def test_double_negation_forced(self):
        model = two_chain({(1, "P", ())})
        assert forces(model, 0, {}, parse("~~P"))
        assert not forces(model, 0, {}, parse("~~P -> P"))

    def test_growing_domain_refutes_universal_shift(self):
        # P(0) becomes true above the root, P(1) never does
        model = two_chain({(1, "P", (0,))}, domains=({0}, {0, 1}))
        f = parse("(~forall x. ~~P(x)) -> exists x. ~P(x)")
        assert not forces(model, 0, {}, f)

    def test_free_variable_needs_environment(self):
        model = two_chain(set())
        with pytest.raises(UnboundVariableError):
            forces(model, 0, {}, atom("P", "x"))
        assert not forces(model, 0, {"x": 0}, atom("P", "x"))


@pytest.mark.unit
class TestFrames:
    """Frame catalogs."""

    def test_catalog_three_worlds(self):
        assert len(frames(SearchBounds(max_worlds=3))) == 4

    @pytest.mark.parametrize("worlds,count", [(1, 1), (2, 2), (3, 4), (4, 9)])
    def test_all_rooted_posets_up_to_isomorphism(self, worlds, count):
        assert len(frames(SearchBounds(max_worlds=worlds, catalog="all"))) == count

    def test_fork_shape(self):
        n, order = fork(2)
        assert n == 3
        assert (1, 2) not in order and (0, 2) in order

    @pytest.mark.parametrize(
        "kwargs", [{"max_worlds": 0}, {"max_domain": 0}, {"catalog": "every"}]
    )
    def test_invalid_bounds(self, kwargs):
        with pytest.raises(ConfigError):
            SearchBounds(**kwargs)


@pytest.mark.unit
class TestModelEnumeration:
    """Enumerated models are monotone and forcing persists."""

    def test_models_are_monotone(self):
        bounds = SearchBounds(max_worlds=3, max_domain=2)
        f = parse("forall x. (P(x) | ~P(x))")
        for model in itertools.islice(iter_models({"P": 1}, bounds), 400):
            assert check_monotone(model)
            assert forcing_is_monotone(model, f)

    def test_propositional_models_have_one_element(self):
        for model in iter_models({"P": 0}, SearchBounds(max_worlds=2), first_order=False):
            assert all(d == frozenset({0}) for d in model.domains)


@pytest.mark.unit
class TestCountermodels:
    """The bounded search finds small countermodels."""

    @pytest.mark.parametrize(
        "text,max_worlds",
        [
            ("P | ~P", 2),
            ("~~P -> P", 2),
            ("(P -> Q) | (Q -> P)", 3),
            ("~P | ~~P", 3),
        ],
    )
    def test_propositional(self, text, max_worlds):
        found = find_countermodel(parse(text))
        assert found is not None
        assert len(found.model.worlds) <= max_worlds
        assert not forces(found.model, 0, {}, parse(text))

    def test_first_order(self):
        found = find_countermodel(parse("(~forall x. ~~P(x)) -> exists x. ~P(x)"))
        assert found is not None
        assert len(found.model.worlds) == 2

    def test_valid_formula_has_none(self):
        assert find_countermodel(parse("~~(P | ~P)")) is None

    def test_diagram_and_record(self):
        found = find_countermodel(parse("P | ~P"))
        text = found.diagram()
        assert text.startswith("worlds: w0, w1")
        assert "w0 < w1" in text
        record = found.as_record()
        assert record["world"] == 0
        assert record["formula"] == "P | ~P"


@pytest.mark.unit
class TestCuratedTable:
    """Schemas valid on every finite frame."""

    def test_two_entries(self):
        assert [e.key for e in CURATED_REFUTATIONS] == ["dn-shift", "dn-shift-dual"]
        assert all(e.status == FINITE_FRAME_STATUS for e in CURATED_REFUTATIONS)

    def test_lookup_is_alpha_invariant(self):
        f = parse("(~~forall y. ~~P(y)) -> ~~forall z. P(z)")
        assert curated_entry(f).key == "dn-shift"

    def test_lookup_ignores_negation_spelling(self):
        f = parse("((forall x. P(x)) -> bot) -> ~~exists x. ~P(x)")
        assert curated_entry(f).key == "dn-shift-dual"

    def test_no_finite_countermodel(self):
        for entry in CURATED_REFUTATIONS:
            assert find_countermodel(entry.formula) is None

    def test_unrelated_formula(self):
        assert curated_entry(parse("P -> P")) is None
