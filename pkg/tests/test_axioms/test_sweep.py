# -*- coding: utf-8 -*-
import pytest

from moodal.axioms.schemas import select_schemas
from moodal.axioms.sweep import (
    MODUS_PONENS,
    NECESSITATION,
    Failure,
    SchemaSummary,
    SoundnessReport,
    derived_fact_sweep,
    goodness_coherence_counterexample,
    rule_preservation_check,
    soundness_sweep,
)
from moodal.context import MoodalContext
from moodal.exceptions import CapExceededError, SemanticsMismatchError
from moodal.fixtures import load_fixture
from moodal.formula import Happy, Implies, Var
from moodal.semantics import evaluator_for
from tests.builders import non_transitive_model

p, q = Var("p"), Var("q")


class TestSoundnessSweep(object):
    def setup_method(self, test_method):
        self.gift = load_fixture("gift")

    def test_gift_has_no_failures(self):
        report = soundness_sweep(self.gift, 1)
        assert report.ok
        assert report.failures == ()
        assert len(report.summaries) == 21

    def test_instance_counts(self):
        report = soundness_sweep(self.gift, 1)
        counts = {summary.schema: summary.instances for summary in report.summaries}
        # ten formulas of depth at most one, two agents
        assert counts["truth-n"] == 10
        assert counts["truth-k"] == 20
        assert counts["distributivity-n"] == 100
        assert counts["distributivity-k"] == 200

    def test_sweep_over_selected_schemas(self):
        report = soundness_sweep(
            self.gift, 0, schemas=select_schemas(["truth-e", "counterfactual"])
        )
        assert report.schemas == (
            "truth-e[H]",
            "truth-e[S]",
            "counterfactual[H]",
            "counterfactual[S]",
        )
        assert report.instance_count == 8

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "name",
        [
            pytest.param("battle", id="battle"),
            pytest.param("lottery", id="lottery"),
        ],
    )
    def test_fixtures_have_no_failures(self, name):
        assert soundness_sweep(load_fixture(name), 1).ok

    @pytest.mark.parametrize("name", ["undef-left", "undef-right"])
    def test_undefinability_pair_has_no_failures(self, name):
        report = soundness_sweep(load_fixture(name), 1)
        assert report.ok
        assert report.instance_count > 0

    @pytest.mark.slow
    def test_gift_has_no_failures_to_depth_two(self):
        report = soundness_sweep(self.gift, 2)
        assert report.ok
        assert "distributivity-k" in report.truncated

    def test_non_transitive_model_breaks_coherence(self):
        report = soundness_sweep(
            non_transitive_model(), 0, schemas=select_schemas(["coherence-same"])
        )
        assert not report.ok
        failing = {(f.schema, f.agent, f.substitution, f.worlds) for f in report.failures}
        assert ("coherence-same[H]", "a", (p, q), ("x", "y", "z")) in failing
        assert [summary.status for summary in report.summaries] == ["FAILED", "PASSED"]

    def test_strict_goodness_breaks_coherence(self):
        report = soundness_sweep(
            load_fixture("battle-good-strict"), 0, schemas=select_schemas(["coherence"])
        )
        assert not report.ok
        assert any(
            failure.substitution == (Var("rus_s"), Var("same"))
            and failure.agent == "s"
            and "(R,R)" in failure.worlds
            for failure in report.failures
        )

    def test_broad_goodness_keeps_coherence_on_atoms(self):
        report = soundness_sweep(
            load_fixture("battle-good-broad"), 0, schemas=select_schemas(["coherence"])
        )
        assert report.ok

    def test_broad_goodness_breaks_coherence_on_implications(self):
        report = soundness_sweep(
            load_fixture("battle-good-broad"),
            1,
            schemas=select_schemas(["coherence-same"]),
        )
        phi = Implies(Var("rus_s"), Var("rus_p"))
        psi = Implies(Var("rus_p"), Var("rus_s"))
        assert not report.ok
        assert any(
            failure.schema == "coherence-same[H]"
            and failure.agent == "s"
            and failure.substitution == (phi, psi)
            for failure in report.failures
        )

    def test_utility_models_are_rejected(self):
        with pytest.raises(SemanticsMismatchError):
            soundness_sweep(load_fixture("battle-util"), 1)

    def test_formula_cap(self):
        with pytest.raises(CapExceededError) as excinfo:
            soundness_sweep(self.gift, 2, MoodalContext(cap=100))
        assert excinfo.value.what == "formulas"
        assert excinfo.value.count == 181

    def test_instance_cap(self):
        with pytest.raises(CapExceededError) as excinfo:
            soundness_sweep(self.gift, 1, MoodalContext(cap=500))
        assert excinfo.value.what == "axiom instances"

    def test_pair_cap_truncates_two_slot_schemas(self):
        report = soundness_sweep(
            self.gift,
            1,
            MoodalContext(pair_cap=50),
            select_schemas(["truth-k", "distributivity-k"]),
        )
        assert report.truncated == ("distributivity-k",)
        assert [summary.instances for summary in report.summaries] == [20, 50]

    def test_workers_do_not_change_the_report(self):
        schemas = select_schemas(["coherence-same"])
        single = soundness_sweep(non_transitive_model(), 1, schemas=schemas)
        threaded = soundness_sweep(
            non_transitive_model(), 1, MoodalContext(workers=4), schemas
        )
        assert threaded == single


class TestDerivedFacts(object):
    def test_gift_derived_facts(self):
        report = derived_fact_sweep(load_fixture("gift"), 1)
        assert report.ok
        assert report.schemas == (
            "emotion-knowledge[H]",
            "emotion-knowledge[S]",
            "positive-introspection-n",
            "positive-introspection-k",
        )

    @pytest.mark.parametrize(
        "name",
        [
            pytest.param("battle", id="battle"),
            pytest.param("undef-left", id="undef left"),
            pytest.param("lottery-good", id="goodness"),
            pytest.param("battle-good-strict", id="strict goodness"),
        ],
    )
    def test_fixtures_keep_derived_facts(self, name):
        report = derived_fact_sweep(load_fixture(name), 1)
        assert report.ok
        assert report.instance_count > 0


class TestRulePreservation(object):
    def test_gift_rules(self):
        report = rule_preservation_check(load_fixture("gift"), 1)
        assert report.ok
        assert report.schemas == (MODUS_PONENS, NECESSITATION)

    def test_necessitation_counts_every_conclusion(self):
        report = rule_preservation_check(load_fixture("gift"), 1)
        necessitation = report.summaries[1]
        # gift -> gift is the only valid formula of depth at most one
        assert necessitation.instances == 3

    def test_pair_cap_marks_truncation(self):
        report = rule_preservation_check(
            load_fixture("gift"), 1, MoodalContext(pair_cap=5)
        )
        assert report.summaries[0].truncated
        assert report.summaries[0].instances == 5


class TestCoherenceCounterexample(object):
    def setup_method(self, test_method):
        self.counterexample = goodness_coherence_counterexample()

    def test_instance_fails_in_strict_reading(self):
        model, formula, world = self.counterexample
        assert model.name == "battle-good-strict"
        assert world == "(R,R)"
        evaluator = evaluator_for(model)
        assert not evaluator.holds(world, formula)
        assert evaluator.holds(world, Happy("s", Var("rus_s")))
        assert evaluator.holds(world, Happy("s", Var("same")))

    @pytest.mark.parametrize("name", ["battle-good-broad", "battle"])
    def test_instance_is_valid_elsewhere(self, name):
        formula = self.counterexample.formula
        assert evaluator_for(load_fixture(name)).valid(formula)


class TestSoundnessReport(object):
    def setup_method(self, test_method):
        failure = Failure("truth-k", "a", (p,), Happy("a", p), ("w1",))
        self.report = SoundnessReport(
            "broken",
            1,
            (SchemaSummary("truth-k", 4, 1), SchemaSummary("distributivity-k", 9, 0, True)),
            (failure,),
        )

    def test_summary_table(self):
        assert self.report.summary_table() == (
            "schema            instances  failures  status\n"
            "truth-k                   4         1  FAILED\n"
            "distributivity-k          9         0  PASSED TRUNCATED"
        )

    def test_str_lists_failures(self):
        text = str(self.report)
        assert text.startswith("broken: 13 instances up to depth 1, 1 failures")
        assert text.endswith("truth-k (a): H[a] p fails at w1")

    def test_to_dict(self):
        result = self.report.to_dict()
        assert result["ok"] is False
        assert result["instances"] == 13
        assert result["failures"][0]["substitution"] == ["p"]
        assert result["schemas"][1]["truncated"] is True
