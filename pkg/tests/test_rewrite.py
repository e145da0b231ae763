"""Tests for the simplification rewrite calculus."""

import pytest
from hypothesis import given, settings

from negtrans.errors import (
    InvalidRuleSetError,
    NotARedexError,
    RuleFormatError,
    UnknownRuleSetError,
)
from negtrans.formula import Symbol, atom
from negtrans.parser import parse, render
from negtrans.rewrite import (
    MAXIMAL_NAMES,
    TRANSLATION_OF,
    RewriteRule,
    RuleSet,
    Side,
    Validity,
    apply_at,
    builtin_ruleset,
    dump_ruleset,
    enumerate_all_paths,
    enumerate_maximal,
    expected_length,
    find_redexes,
    kolmogorov_form,
    label,
    load_ruleset,
    longest_result,
    match,
    parse_rule,
    r3_exists_finish,
    standard_path,
    validate_rule,
)
from negtrans.translations import translate

from strategies import quantified

AND, OR, IMP, ALL, EX = Symbol.AND, Symbol.OR, Symbol.IMP, Symbol.FORALL, Symbol.EXISTS


@pytest.mark.unit
class TestRules:
    @pytest.mark.parametrize(
        "name,symbol,text",
        [
            ("r1", AND, "~~(~~A & ~~B) => ~~(A & B)"),
            ("r1", EX, "~~exists x. ~~A => ~~exists x. A"),
            ("r2", IMP, "~~(~A -> ~B) => ~(~A & B)"),
            ("r3", OR, "~~(~~A | ~~B) => ~~~A -> ~~B"),
            ("r4", AND, "~(~~A & ~~B) => ~~A -> ~B"),
            ("r4", EX, "~exists x. ~~A => forall x. ~A"),
        ],
    )
    def test_schemas(self, name, symbol, text):
        assert str(builtin_ruleset(name).rule_for(symbol)) == text

    def test_negation_counts(self):
        rule = builtin_ruleset("r1").rule_for(AND)
        assert (rule.lhs_negations, rule.rhs_negations) == (6, 2)
        assert rule.decreases

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(side=Side.INSIDE, n=3, symbol=AND, result=AND),
            dict(side=Side.INSIDE, n=2, symbol=AND, result=AND, n1=3),
            dict(side=Side.INSIDE, n=2, symbol=ALL, result=AND),
            dict(side=Side.OUTSIDE, n=2, symbol=ALL, result=EX, n2=1),
        ],
    )
    def test_rejects_bad_rules(self, kwargs):
        with pytest.raises(InvalidRuleSetError):
            RewriteRule(**kwargs)

    def test_ruleset_needs_shared_side_and_n(self):
        with pytest.raises(InvalidRuleSetError):
            RuleSet(
                "mixed",
                Side.INSIDE,
                2,
                (RewriteRule(Side.INSIDE, 2, AND, AND), RewriteRule(Side.INSIDE, 1, OR, AND)),
            )

    def test_ruleset_one_rule_per_symbol(self):
        with pytest.raises(InvalidRuleSetError):
            RuleSet(
                "twice",
                Side.INSIDE,
                2,
                (RewriteRule(Side.INSIDE, 2, AND, AND), RewriteRule(Side.INSIDE, 2, AND, OR)),
            )

    def test_rules_are_ordered_by_symbol(self):
        rs = RuleSet(
            "custom",
            Side.INSIDE,
            2,
            (RewriteRule(Side.INSIDE, 2, EX, EX), RewriteRule(Side.INSIDE, 2, AND, AND)),
        )
        assert rs.symbols == (AND, EX)


@pytest.mark.unit
class TestBuiltins:
    def test_removal_suffixes(self):
        rs = builtin_ruleset("r3_prime_minus_imp")
        assert rs.name == "r3_prime_minus_imp"
        assert rs.symbols == (AND, ALL)

    def test_chained_removals(self):
        assert builtin_ruleset("r1_minus_and_minus_or").symbols == (IMP, EX)

    def test_r1_tilde_replaces_implication(self):
        rule = builtin_ruleset("r1_tilde").rule_for(IMP)
        assert str(rule) == "~~(~~A -> ~~B) => ~~(A -> ~~B)"

    @pytest.mark.parametrize("name", ["r9", "r1_minus_bogus", "r1_minus_"])
    def test_unknown_names(self, name):
        with pytest.raises(UnknownRuleSetError) as e:
            builtin_ruleset(name)
        assert "r3_prime" in str(e.value)


@pytest.mark.unit
class TestRuleText:
    def test_parse_rule(self):
        assert parse_rule("~~(~~A & ~~B) => ~~(A & B)") == builtin_ruleset("r1").rule_for(AND)

    @pytest.mark.parametrize("text", ["~~(~~A & ~~B)", "A => B", "~~(A & B) => ~~A"])
    def test_parse_rule_rejects(self, text):
        with pytest.raises(RuleFormatError):
            parse_rule(text)

    def test_load_dump(self):
        r2 = builtin_ruleset("r2")
        loaded = load_ruleset(dump_ruleset(r2))
        assert loaded.name == "r2"
        assert loaded.same_rules(r2)

    def test_load_with_comments(self):
        text = "# two rules\n\n~~(~~A & ~~B) => ~~(A & B)  # and\n~~exists x. ~~A => ~~exists x. A\n"
        rs = load_ruleset(text, name="mine")
        assert rs.name == "mine"
        assert rs.symbols == (AND, EX)

    def test_load_reports_line(self):
        with pytest.raises(RuleFormatError) as e:
            load_ruleset("~~(~~A & ~~B) => ~~(A & B)\n~~(A & & B) => A\n")
        assert e.value.line_no == 2

    def test_load_empty(self):
        with pytest.raises(RuleFormatError):
            load_ruleset("# nothing here\n")


@pytest.mark.unit
class TestMatching:
    def test_match_binds_holes(self, f):
        rule = builtin_ruleset("r1").rule_for(AND)
        m = match(rule.lhs, f("~~(~~P & ~~Q(x))"))
        assert m.holes == {"A": atom("P"), "B": atom("Q", "x")}

    def test_match_fails(self, f):
        rule = builtin_ruleset("r1").rule_for(AND)
        assert match(rule.lhs, f("~~(~P & ~~Q)")) is None

    def test_quantifier_keeps_its_variable(self, f):
        rule = builtin_ruleset("r1").rule_for(EX)
        assert apply_at(f("~~exists y. ~~P(y)"), (), rule) == f("~~exists y. P(y)")

    def test_apply_at_not_a_redex(self, f):
        with pytest.raises(NotARedexError):
            apply_at(f("~~(P & Q)"), (), builtin_ruleset("r1").rule_for(AND))

    def test_find_redexes(self, f):
        redexes = find_redexes(f("~~(~~P & ~~exists x. ~~Q(x))"), builtin_ruleset("r1"))
        assert [r.rule.symbol for r in redexes] == [AND, EX]


@pytest.mark.unit
class TestPaths:
    def test_standard_path(self, f):
        path = standard_path(f("~~(~~P & ~~exists x. ~~Q(x))"), builtin_ruleset("r1"))
        assert path.length == 2
        assert path.final == f("~~(P & exists x. Q(x))")

    def test_label_is_ignored_by_equality(self, f):
        g = f("~~(P & forall x. Q(x))")
        assert label(g) == g

    def test_expected_length(self, f):
        source = f("(P | Q) -> forall x. R(x)")
        assert expected_length(source, builtin_ruleset("r3")) == 3
        assert expected_length(source, builtin_ruleset("r1")) == 2

    @settings(max_examples=30, deadline=None)
    @given(quantified())
    def test_standard_length_is_connective_count(self, a):
        for name in MAXIMAL_NAMES:
            rs = builtin_ruleset(name)
            assert standard_path(kolmogorov_form(a), rs).length == expected_length(a, rs)

    @settings(max_examples=30, deadline=None)
    @given(quantified())
    def test_rule_sets_land_on_translations(self, a):
        for rs_name, t_name in TRANSLATION_OF.items():
            assert longest_result(kolmogorov_form(a), builtin_ruleset(rs_name)) == translate(
                t_name, a
            )

    def test_paths_can_get_stuck(self):
        start = label(parse("~~(~~(~~A & ~~B) & ~~exists x. ~~A)"))
        paths = enumerate_all_paths(start, builtin_ruleset("r1"))
        lengths = {render(p.final): p.length for p in paths}
        assert lengths == {
            "~~((~~A & ~~B) & exists x. ~~A)": 1,
            "~~((A & B) & exists x. ~~A)": 2,
            "~~((~~A & ~~B) & exists x. A)": 2,
            "~~((A & B) & exists x. A)": 3,
        }

    def test_nonmaximal_set_acts_twice(self, f):
        rs = builtin_ruleset("example_nonmaximal")
        source = f("A & (B & C)")
        paths = enumerate_all_paths(kolmogorov_form(source), rs)
        longest = max(paths, key=lambda p: p.length)
        assert expected_length(source, rs) == 2
        assert longest.length == 3
        assert longest.revisited_tags()
        assert longest.final == f("~(~A | ~(B & ~~C))")

    def test_exists_finish(self, f):
        assert r3_exists_finish(kolmogorov_form(f("exists x. P(x)"))) == f("~forall x. ~P(x)")


@pytest.mark.integration
class TestValidity:
    def test_valid_rule(self, kernel):
        assert validate_rule(builtin_ruleset("r1").rule_for(AND), kernel).status is Validity.VALID

    def test_non_decreasing_rule(self, kernel):
        rule = RewriteRule(Side.INSIDE, 2, AND, AND, n1=2, n2=2)
        result = validate_rule(rule, kernel)
        assert result.status is Validity.INVALID
        assert "negations" in result.reason

    def test_refuted_rule_has_countermodel(self, kernel):
        result = validate_rule(RewriteRule(Side.OUTSIDE, 2, OR, OR), kernel)
        assert result.status is Validity.INVALID
        assert result.countermodel is not None
        assert len(result.countermodel.model.worlds) >= 2

    def test_double_negation_shift_is_curated(self, kernel):
        result = validate_rule(RewriteRule(Side.INSIDE, 2, ALL, ALL), kernel)
        assert result.status is Validity.UNKNOWN
        assert result.curated is not None


@pytest.mark.slow
def test_enumerate_maximal_finds_builtin_sets(kernel):
    report = enumerate_maximal(kernel)
    for found, name in zip(report.sets, MAXIMAL_NAMES):
        assert found.same_rules(builtin_ruleset(name))
    assert report.ties == ()
    assert all(v.curated is not None for v in report.undecided)
