# -*- coding: utf-8 -*-
from moodal.fixtures import load_fixture
from moodal.formula import Fragment, Happy, Sad, Var
from moodal.search.report import (
    Distinguished,
    Equivalent,
    Exhausted,
    SeparatingPair,
    WitnessFound,
)
from moodal.syntax.loader import load_model, model_to_dict

p = Var("p")


class TestReports(object):
    def setup_method(self, test_method):
        self.left = load_fixture("undef-left")
        self.right = load_fixture("undef-right")

    def test_exhausted(self):
        report = Exhausted(2, 1, "no model satisfies H[a] p")
        assert not report.success
        assert str(report) == "Exhausted: 2 models up to 1 worlds, no model satisfies H[a] p"
        assert str(Exhausted(2, 1)) == "Exhausted: 2 models up to 1 worlds"
        assert report.to_dict()["outcome"] == "Exhausted"

    def test_equivalent(self):
        report = Equivalent(3966, 3, Fragment.NO_SAD)
        assert report.success
        assert str(report) == (
            "Equivalent: 3966 no-sad formulas up to depth 3 agree at every world"
        )
        assert report.to_dict() == {
            "outcome": "Equivalent",
            "formulas_checked": 3966,
            "depth": 3,
            "fragment": "no-sad",
        }

    def test_distinguished(self):
        report = Distinguished(Sad("a", p), "w1", True, False, 7, 1)
        assert not report.success
        assert str(report) == (
            "Distinguished: S[a] p at w1 (holds on the left, fails on the right)"
        )
        assert report.to_dict()["left"] is True

    def test_witness_found_embeds_a_loadable_model(self):
        report = WitnessFound(self.left, "w1", Sad("a", p), "satisfy", 5)
        lines = str(report).splitlines()
        assert lines[0] == "WitnessFound: satisfies S[a] p at w1 after 5 models"
        assert lines[1] == "  kind: preference"
        assert load_model(_dedent(lines[1:])) == self.left
        assert report.to_dict()["model"] == model_to_dict(self.left)

    def test_refuting_witness_text(self):
        report = WitnessFound(self.right, "w1", Sad("a", p), "refute", 1)
        assert str(report).startswith("WitnessFound: refutes S[a] p at w1")

    def test_separating_pair(self):
        report = SeparatingPair(
            self.left, self.right, Sad("a", p), "w1", Fragment.NO_SAD, 3, 3966, 12
        )
        text = str(report)
        assert text.startswith(
            "SeparatingPair: S[a] p tells the models apart at w1; "
            "they agree on 3966 no-sad formulas up to depth 3"
        )
        assert "\nleft:\n  kind: preference" in text
        assert "\nright:\n  kind: preference" in text
        result = report.to_dict()
        assert result["left"] == model_to_dict(self.left)
        assert result["right"]["pref"] == {"a": []}
        assert result["pairs_examined"] == 12

    def test_happy_report_formula_text(self):
        report = Distinguished(Happy("a", p), "w2", False, True, 1, 0)
        assert "fails on the left, holds on the right" in str(report)


def _dedent(lines):
    return "\n".join(line[2:] for line in lines)
