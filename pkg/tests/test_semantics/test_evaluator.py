# -*- coding: utf-8 -*-
from dataclasses import fields
from decimal import Decimal

import pytest
from hypothesis import given

from moodal.exceptions import (
    DegreeInGoodnessSemanticsError,
    DegreeInPreferenceSemanticsError,
    MissingDegreeError,
    SemanticsMismatchError,
    UnknownAgentError,
    UnknownVariableError,
    UnknownWorldError,
)
from moodal.fixtures import load_fixture
from moodal.formula import (
    Formula,
    Fragment,
    Happy,
    HappyDeg,
    Sad,
    SadDeg,
    Var,
    enumerate_formulas,
    tau,
)
from moodal.model.transforms import converse
from moodal.semantics import (
    GoodnessEvaluator,
    PreferenceEvaluator,
    UtilityEvaluator,
    evaluate,
    evaluate_goodness,
    evaluate_utility,
    evaluator_for,
    extension,
    valid_in_model,
)
from moodal.syntax.parser import parse_formula
from tests.builders import preference_model
from tests.strategies import formulas

DIAGONAL = frozenset(["(I,I)", "(R,R)"])
OFF_DIAGONAL = frozenset(["(I,R)", "(R,I)"])


def _extension(model_name, text, semantics=None):
    return evaluator_for(load_fixture(model_name), semantics).extension(
        parse_formula(text)
    )


def _replace(formula, name, replacement):
    if isinstance(formula, Var):
        return replacement if formula.name == name else formula
    values = [getattr(formula, field.name) for field in fields(formula)]
    return type(formula)(
        *(
            _replace(value, name, replacement) if isinstance(value, Formula) else value
            for value in values
        )
    )


class TestPreferenceSemantics(object):
    @pytest.mark.parametrize(
        "model,text,expected",
        [
            pytest.param("gift", "H[p] gift", {"w", "u"}, id="recipient glad"),
            pytest.param("gift", "H[s] gift", {"w"}, id="sender glad"),
            pytest.param("gift", "H[s] H[p] gift", {"w"}, id="glad recipient glad"),
            pytest.param("gift", "H[p] H[s] gift", set(), id="glad sender glad"),
            pytest.param("gift", "H[p] H[s] H[p] gift", set(), id="third level"),
            pytest.param("gift", "S[s] !gift", {"t"}, id="sender sad"),
            pytest.param("gift", "K[p] S[s] !gift", set(), id="knows sender sad"),
            pytest.param("gift", "S[p] !gift", {"v", "t"}, id="recipient sad"),
            pytest.param("gift", "S[s] S[p] !gift", {"t"}, id="sad recipient sad"),
            pytest.param("gift", "K[p] S[s] S[p] !gift", set(), id="knows nested sad"),
            pytest.param("gift", "H[p] S[s] !gift", set(), id="glad sender sad"),
            pytest.param("battle", "H[s] same", DIAGONAL, id="sanaz same"),
            pytest.param("battle", "H[p] same", DIAGONAL, id="pavel same"),
            pytest.param("battle", "H[p] H[s] same", DIAGONAL, id="nested same"),
            pytest.param("battle", "H[s] H[p] H[s] same", DIAGONAL, id="third same"),
            pytest.param("battle", "H[s] rus", {"(R,R)"}, id="sanaz russian"),
            pytest.param("battle", "H[p] rus", set(), id="pavel russian"),
            pytest.param("battle", "H[p] H[s] rus", set(), id="pavel nested russian"),
            pytest.param("battle", "S[s] diff", OFF_DIAGONAL, id="sanaz apart"),
            pytest.param("battle", "S[p] diff", OFF_DIAGONAL, id="pavel apart"),
            pytest.param("battle", "S[p] S[s] diff", OFF_DIAGONAL, id="nested apart"),
            pytest.param("lottery", "H[s] win_s", {"u"}, id="winner glad"),
            pytest.param("lottery", "S[p] lost_p", {"u", "v"}, id="loser sad"),
        ],
    )
    def test_extension(self, model, text, expected):
        assert _extension(model, text) == frozenset(expected)

    @pytest.mark.parametrize(
        "model,world,text,expected",
        [
            pytest.param("gift", "u", "H[p] gift", True, id="gift at u"),
            pytest.param("gift", "t", "H[p] gift", False, id="gift at t"),
            pytest.param("battle", "(R,R)", "H[p] rus_p", False, id="pavel own choice"),
            pytest.param("battle", "(R,R)", "H[s] rus_s", False, id="sanaz own choice"),
            pytest.param("lottery", "u", "H[s] lost_p", False, id="glad p lost"),
            pytest.param("lottery", "u", "K[p] H[s] win_s", False, id="knows winner"),
            pytest.param("lottery", "u", "S[p] lost_p", True, id="sad lost"),
            pytest.param("lottery", "u", "K[s] S[p] lost_p", True, id="knows sad"),
        ],
    )
    def test_evaluate(self, model, world, text, expected):
        verdict = evaluate(load_fixture(model), world, parse_formula(text))
        assert verdict.holds is expected
        assert bool(verdict) is expected

    def test_h_p_s_gift_fails_everywhere(self):
        gift = load_fixture("gift")
        formula = parse_formula("H[p] S[s] !gift")
        for world in gift.worlds:
            assert not evaluate(gift, world, formula).holds

    def test_emotion_about_valid_formula_never_holds(self):
        assert _extension("gift", "H[s] (gift -> gift)") == frozenset()
        assert _extension("gift", "S[s] (gift -> gift)") == frozenset()

    def test_comparison_ranges_beyond_the_block(self):
        formula = parse_formula("H[a] p")
        unordered = preference_model(["w1", "w2"], valuation={"p": ["w1"]})
        ordered = preference_model(
            ["w1", "w2"], valuation={"p": ["w1"]}, pref={"a": [("w2", "w1")]}
        )
        assert PreferenceEvaluator(unordered).extension(formula) == frozenset()
        assert PreferenceEvaluator(ordered).extension(formula) == frozenset(["w1"])

    def test_valid_in_model(self):
        gift = load_fixture("gift")
        assert valid_in_model(gift, parse_formula("H[p] gift -> gift"))
        assert not valid_in_model(gift, parse_formula("H[p] gift"))

    def test_extension_function_uses_model_kind(self):
        assert extension(load_fixture("battle-util"), parse_formula("H[s;2] rus")) == (
            frozenset(["(R,R)"])
        )

    def test_memo_is_shared(self):
        evaluator = PreferenceEvaluator(load_fixture("gift"))
        formula = parse_formula("H[p] gift")
        first = evaluator.extension(formula)
        assert evaluator.extension(formula) is first
        assert evaluator.extension(parse_formula("H[p] gift")) is first

    @given(formulas(agents=("s", "p"), variables=("same", "rus")))
    def test_equivalent_operands_are_interchangeable(self, formula):
        evaluator = PreferenceEvaluator(load_fixture("battle"))
        replaced = _replace(formula, "same", parse_formula("!diff"))
        assert evaluator.extension(replaced) == evaluator.extension(formula)

    @pytest.mark.parametrize(
        "name,depth",
        [
            pytest.param("lottery", 1, id="lottery"),
            pytest.param("battle", 1, id="battle"),
            pytest.param("gift", 2, id="gift"),
            pytest.param("undef-left", 3, id="undef left"),
            pytest.param("undef-right", 3, id="undef right"),
            pytest.param("gift", 3, id="gift deep", marks=pytest.mark.slow),
        ],
    )
    def test_converse_reverses_emotions(self, name, depth):
        model = load_fixture(name)
        original = PreferenceEvaluator(model)
        dual = PreferenceEvaluator(converse(model))
        for formula in enumerate_formulas(model.variables, model.agents, depth):
            assert tau(tau(formula)) == formula
            assert dual.extension(tau(formula)) == original.extension(formula)

    @pytest.mark.parametrize(
        "name,depth",
        [
            pytest.param("gift", 2, id="gift"),
            pytest.param("battle", 1, id="battle"),
            pytest.param("lottery", 1, id="lottery"),
            pytest.param("undef-left", 2, id="undef left"),
            pytest.param("undef-right", 2, id="undef right"),
        ],
    )
    def test_operands_with_equal_extensions_are_interchangeable(self, name, depth):
        model = load_fixture(name)
        evaluator = PreferenceEvaluator(model)
        seen = {}
        for formula in enumerate_formulas(model.variables, model.agents, depth):
            emotions = tuple(
                evaluator.extension(emotion(agent, formula))
                for agent in model.agents
                for emotion in (Happy, Sad)
            )
            operand = evaluator.extension(formula)
            assert seen.setdefault(operand, emotions) == emotions


class TestUndefinability(object):
    def setup_method(self, test_method):
        self.left = PreferenceEvaluator(load_fixture("undef-left"))
        self.right = PreferenceEvaluator(load_fixture("undef-right"))

    def test_sadness_distinguishes_the_models(self):
        formula = parse_formula("S[a] p")
        assert self.left.holds("w1", formula)
        assert not self.right.holds("w1", formula)

    def test_sadness_free_formulas_agree_to_depth_three(self):
        for formula in enumerate_formulas(["p"], ["a"], 3, Fragment.NO_SAD):
            assert self.left.extension(formula) == self.right.extension(formula)

    @pytest.mark.slow
    def test_happiness_never_holds_to_depth_three(self):
        checked = 0
        for formula in enumerate_formulas(["p"], ["a"], 3):
            checked += 1
            assert self.left.extension(Happy("a", formula)) == frozenset()
        assert checked == 7651


class TestUtilitySemantics(object):
    @pytest.mark.parametrize(
        "world,text,expected",
        [
            pytest.param("(I,I)", "H[s;1] same", True, id="same at ii"),
            pytest.param("(R,R)", "H[s;1] same", True, id="same at rr"),
            pytest.param("(R,R)", "H[s;2] rus", True, id="russian by two"),
            pytest.param("(R,R)", "H[s;3] rus", False, id="russian by three"),
            pytest.param("(R,R)", "H[s;0] same & !same", False, id="contradiction"),
            pytest.param("(I,R)", "S[p;1] diff", True, id="pavel sad apart"),
            pytest.param("(I,R)", "S[p;1.5] diff", False, id="pavel not that sad"),
        ],
    )
    def test_evaluate_utility(self, world, text, expected):
        model = load_fixture("battle-util")
        assert evaluate_utility(model, world, parse_formula(text)).holds is expected

    def test_degree_monotonicity(self):
        evaluator = UtilityEvaluator(load_fixture("battle-util"))
        degrees = [Decimal(d) for d in ("0", "0.5", "1", "2", "3")]
        operands = enumerate_formulas(
            ["same", "rus", "diff"], ["s", "p"], 1, Fragment.NO_EMOTION
        )
        for operand in operands:
            for agent in ("s", "p"):
                for constructor in (HappyDeg, SadDeg):
                    extensions = [
                        evaluator.extension(constructor(agent, degree, operand))
                        for degree in degrees
                    ]
                    for weaker, stronger in zip(extensions, extensions[1:]):
                        assert stronger <= weaker

    def test_bare_emotion_is_rejected(self):
        with pytest.raises(MissingDegreeError):
            evaluate_utility(load_fixture("battle-util"), "(I,I)", parse_formula("H[s] same"))

    def test_preference_reading_of_utilities(self):
        battle = PreferenceEvaluator(load_fixture("battle"))
        induced = evaluator_for(load_fixture("battle-util"), "pref")
        for formula in enumerate_formulas(["same", "rus"], ["s", "p"], 1):
            assert induced.extension(formula) == battle.extension(formula)


class TestGoodnessSemantics(object):
    @pytest.mark.parametrize(
        "model,world,text,expected",
        [
            pytest.param("battle-good-broad", "(R,R)", "H[s] same", True, id="broad"),
            pytest.param(
                "battle-good-broad", "(R,R)", "H[s] rus_s", False, id="broad russian"
            ),
            pytest.param("battle-good-broad", "(I,I)", "H[s] same", True, id="broad ii"),
            pytest.param(
                "battle-good-strict", "(R,R)", "H[s] rus_s", True, id="strict russian"
            ),
            pytest.param("battle-good-strict", "(R,R)", "H[s] same", True, id="strict"),
            pytest.param("battle-good-broad", "(I,R)", "S[s] diff", True, id="sad apart"),
            pytest.param("gift-good", "w", "H[p] gift", True, id="gift received"),
            pytest.param("lottery-good", "u", "H[s] win_s", True, id="lottery winner"),
        ],
    )
    def test_evaluate_goodness(self, model, world, text, expected):
        verdict = evaluate_goodness(load_fixture(model), world, parse_formula(text))
        assert verdict.holds is expected

    def test_degrees_are_rejected(self):
        with pytest.raises(DegreeInGoodnessSemanticsError):
            _extension("gift-good", "H[p;1] gift")


class TestTrace(object):
    def setup_method(self, test_method):
        self.gift = PreferenceEvaluator(load_fixture("gift"))

    def _trace(self, evaluator, world, text):
        return evaluator.evaluate(world, parse_formula(text), trace=True).trace

    def test_no_trace_by_default(self):
        assert self.gift.evaluate("w", parse_formula("gift")).trace is None

    def test_condition_a_names_block_world(self):
        trace = self._trace(self.gift, "t", "H[p] gift")
        assert (trace[0].tag, trace[0].outcome, trace[0].witness) == ("a", False, ("v",))
        assert (trace[1].formula, trace[1].world, trace[1].tag) == (
            Var("gift"),
            "v",
            "boolean",
        )

    def test_condition_b_names_unordered_pair(self):
        battle = PreferenceEvaluator(load_fixture("battle"))
        trace = self._trace(battle, "(R,R)", "H[p] rus_p")
        assert trace[0].tag == "b"
        assert trace[0].witness == ("(I,I)", "(I,R)")

    def test_condition_c_for_valid_operand(self):
        trace = self._trace(self.gift, "w", "H[s] (gift -> gift)")
        assert (trace[0].tag, trace[0].outcome) == ("c", False)

    def test_holding_emotion_is_reported_under_condition_c(self):
        trace = self._trace(self.gift, "w", "H[s] gift")
        assert (trace[0].tag, trace[0].outcome) == ("c", True)

    def test_goodness_condition_b_names_good_world(self):
        broad = GoodnessEvaluator(load_fixture("battle-good-broad"))
        trace = self._trace(broad, "(R,R)", "H[s] rus_s")
        assert (trace[0].tag, trace[0].witness) == ("b", ("(I,I)",))

    def test_necessity_and_knowledge_name_refuting_world(self):
        assert self._trace(self.gift, "w", "N gift")[0].witness == ("v",)
        knows = self._trace(self.gift, "u", "K[s] gift")
        assert (knows[0].tag, knows[0].witness) == ("knowledge", ("v",))

    def test_implication_skips_consequent_when_antecedent_fails(self):
        trace = self._trace(self.gift, "t", "gift -> H[p] gift")
        assert [entry.tag for entry in trace] == ["boolean", "boolean"]
        assert trace[0].outcome

    def test_root_entry_matches_verdict(self):
        verdict = self.gift.evaluate("u", parse_formula("!H[s] gift"), trace=True)
        assert verdict.trace[0].outcome == verdict.holds


class TestErrors(object):
    def setup_method(self, test_method):
        self.gift = load_fixture("gift")

    @pytest.mark.parametrize(
        "world,text,error",
        [
            pytest.param("x", "gift", UnknownWorldError, id="unknown world"),
            pytest.param("w", "H[o] gift", UnknownAgentError, id="unknown agent"),
            pytest.param("w", "rain", UnknownVariableError, id="unknown variable"),
            pytest.param(
                "w", "H[p;1] gift", DegreeInPreferenceSemanticsError, id="degree"
            ),
        ],
    )
    def test_evaluate_errors(self, world, text, error):
        with pytest.raises(error):
            evaluate(self.gift, world, parse_formula(text))

    def test_wrong_model_kind(self):
        with pytest.raises(SemanticsMismatchError):
            PreferenceEvaluator(load_fixture("battle-util"))
        with pytest.raises(SemanticsMismatchError):
            UtilityEvaluator(self.gift)

    def test_unknown_semantics_name(self):
        with pytest.raises(SemanticsMismatchError):
            evaluator_for(self.gift, "fuzzy")
