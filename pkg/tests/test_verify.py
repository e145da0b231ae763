"""Tests for the verification runner."""

import pytest

from negtrans.errors import EXIT_OK, EXIT_REFUTED, UnknownCheckError
from negtrans.formula import Symbol
from negtrans.rewrite import RewriteRule, Side, builtin_ruleset
from negtrans.verify import (
    CHECKS,
    RESULT_MAP,
    CheckResult,
    Evidence,
    Status,
    Summary,
    VerificationContext,
    check_result_map,
    check_simplification_props,
    run_all,
)


def _result(check_id, status, gaps=()):
    return CheckResult(check_id, "statement", status, gaps=list(gaps))


@pytest.mark.unit
class TestSummary:
    def test_line(self):
        summary = Summary(
            [
                _result("a", Status.PASS),
                _result("b", Status.GAP, ["x"]),
                _result("c", Status.PASS),
            ]
        )
        assert summary.line == "checks: 2 pass, 0 fail, 1 documented-gap"
        assert summary.exit_code == EXIT_OK
        assert summary.documented_gaps == ["x"]

    def test_failure_sets_exit_code(self):
        summary = Summary([_result("a", Status.PASS), _result("b", Status.FAIL)])
        assert summary.exit_code == EXIT_REFUTED

    def test_failures_are_the_failing_evidence(self):
        result = _result("a", Status.FAIL)
        result.evidence = [Evidence("P", "FAIL refuted"), Evidence("Q", "proved")]
        assert [e.instance for e in result.failures] == ["P"]

    def test_evidence_record(self):
        assert Evidence("P", "proved").as_record() == {"instance": "P", "verdict": "proved"}
        record = Evidence("P", "refuted", {"note": "x"}).as_record()
        assert record["witness"] == {"note": "x"}


@pytest.mark.unit
class TestRegistry:
    def test_every_check_is_mapped(self):
        check_result_map()
        assert set(RESULT_MAP.values()) == set(CHECKS)

    def test_order(self):
        assert list(CHECKS) == [
            "lemma-equiv",
            "simplification",
            "paths",
            "translations",
            "minimal-monads",
            "kernel",
        ]

    def test_unknown_check(self, testing_config, kernel):
        with pytest.raises(UnknownCheckError) as e:
            run_all(testing_config, only=["lemma-equiv", "nope"], kernel=kernel)
        assert "lemma-equiv" in str(e.value)


@pytest.mark.integration
class TestChecks:
    def test_lemma_equiv_has_documented_gaps(self, testing_config, kernel):
        seen = []
        summary = run_all(testing_config, only=["lemma-equiv"], kernel=kernel, sink=seen.append)
        (result,) = summary.results
        assert seen == [result]
        assert result.status is Status.GAP
        assert result.failures == []
        assert len(result.gaps) == 2
        assert summary.exit_code == EXIT_OK
        assert result.wall_time > 0

    def test_corpora_are_deterministic(self, testing_config, kernel):
        first = VerificationContext(testing_config, kernel)
        second = VerificationContext(testing_config, kernel)
        assert first.sources == second.sources
        assert len(first.sources) == (
            testing_config.CORPUS_PROPOSITIONAL + testing_config.CORPUS_QUANTIFIED
        )

    @pytest.mark.slow
    @pytest.mark.parametrize("check_id", list(CHECKS))
    def test_check_passes(self, testing_config, kernel, check_id):
        summary = run_all(testing_config, only=[check_id], kernel=kernel)
        (result,) = summary.results
        assert result.status is not Status.FAIL, [e.as_record() for e in result.failures]

    @pytest.mark.slow
    def test_broken_rule_set_fails(self, testing_config, kernel):
        r1 = builtin_ruleset("r1")
        broken = r1.with_rule(RewriteRule(Side.INSIDE, 2, Symbol.OR, Symbol.AND))
        ctx = VerificationContext(testing_config, kernel)
        result = check_simplification_props(ctx, {"r1": broken})
        assert result.status is Status.FAIL
        assert any(e.instance.startswith("r1:") for e in result.failures)

    def test_run_logs_wall_time(self, testing_config, kernel, log_manager, mocker):
        mocker.patch("negtrans.verify.get_log_manager", return_value=log_manager)
        run_all(testing_config, only=["lemma-equiv"], kernel=kernel)
        (metric,) = log_manager.get_metrics("wall_time")
        assert metric["component"] == "verify"
        assert metric["tags"] == {"check": "lemma-equiv"}
