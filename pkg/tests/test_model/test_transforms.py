# -*- coding: utf-8 -*-
import pytest

from moodal.exceptions import MoodalException, UnknownAgentError, UnknownWorldError
from moodal.fixtures import load_fixture
from moodal.model.transforms import (
    converse,
    good_worlds_from_utilities,
    preferences_from_utilities,
    set_prec,
    with_preferences,
)
from tests.builders import preference_model, utility_model


class TestConverse(object):
    def setup_method(self, test_method):
        self.gift = load_fixture("gift")

    def test_converse_of_empty_relation_is_unchanged(self):
        model = load_fixture("undef-right")
        assert converse(model) == model

    def test_converse_is_an_involution(self):
        assert converse(converse(self.gift)) == self.gift

    def test_converse_swaps_pairs(self):
        result = converse(self.gift)
        assert ("t", "v") in result.pref["s"]
        assert ("v", "t") not in result.pref["s"]
        assert len(result.pref["s"]) == len(self.gift.pref["s"])

    def test_converse_keeps_knowledge_and_valuation(self):
        result = converse(self.gift)
        assert result.indist == self.gift.indist
        assert result.valuation == self.gift.valuation
        assert result.name == self.gift.name

    def test_with_preferences(self):
        result = with_preferences(self.gift, {"s": [], "p": [("w", "u")]}, "other")
        assert result.name == "other"
        assert result.pref == {"s": frozenset(), "p": frozenset([("w", "u")])}
        assert result.indist == self.gift.indist


class TestPreferencesFromUtilities(object):
    def setup_method(self, test_method):
        self.battle_util = load_fixture("battle-util")
        self.result = preferences_from_utilities(self.battle_util)

    def test_sanaz_prefers_iranian_together_to_russian_alone(self):
        assert ("(R,I)", "(I,I)") in self.result.pref["s"]

    def test_pavel_prefers_iranian_together_to_russian_together(self):
        assert ("(R,R)", "(I,I)") in self.result.pref["p"]

    def test_equal_utilities_are_unordered(self):
        assert ("(I,R)", "(R,I)") not in self.result.pref["s"]
        assert ("(R,I)", "(I,R)") not in self.result.pref["s"]

    def test_induced_preferences_equal_the_battle_fixture(self):
        assert self.result == load_fixture("battle")

    def test_constant_utility_gives_empty_relation(self):
        model = utility_model(["w1", "w2"], utility={"a": {"w1": 2, "w2": 2}})
        assert preferences_from_utilities(model).pref == {"a": frozenset()}


class TestGoodWorldsFromUtilities(object):
    def setup_method(self, test_method):
        self.battle_util = load_fixture("battle-util")

    @pytest.mark.parametrize(
        "mode,fixture",
        [
            pytest.param("positive", "battle-good-broad", id="positive"),
            pytest.param("maximal", "battle-good-strict", id="maximal"),
        ],
    )
    def test_readings_match_fixtures(self, mode, fixture):
        assert good_worlds_from_utilities(self.battle_util, mode) == load_fixture(
            fixture
        )

    def test_result_is_named_after_mode(self):
        result = good_worlds_from_utilities(self.battle_util, "maximal")
        assert result.name == "battle-util-maximal"

    def test_unknown_mode_raises(self):
        with pytest.raises(MoodalException):
            good_worlds_from_utilities(self.battle_util, "median")


class TestSetPrec(object):
    def setup_method(self, test_method):
        self.gift = load_fixture("gift")

    @pytest.mark.parametrize(
        "agent,lower,upper,expected",
        [
            pytest.param("p", {"t", "v"}, {"w", "u"}, True, id="refuting below"),
            pytest.param("s", set(), {"w"}, True, id="empty lower"),
            pytest.param("s", {"w"}, set(), True, id="empty upper"),
            pytest.param("s", {"w"}, {"u"}, False, id="incomparable"),
            pytest.param("s", {"w"}, {"v"}, False, id="reversed"),
        ],
    )
    def test_set_prec(self, agent, lower, upper, expected):
        assert set_prec(self.gift, agent, lower, upper) is expected

    def test_unknown_world_raises(self):
        with pytest.raises(UnknownWorldError):
            set_prec(self.gift, "s", {"x"}, {"w"})

    def test_unknown_agent_raises(self):
        with pytest.raises(UnknownAgentError):
            set_prec(self.gift, "o", {"t"}, {"w"})

    def test_empty_sets_are_vacuous_on_any_model(self):
        model = preference_model(["w1"])
        assert set_prec(model, "a", [], ["w1"])
