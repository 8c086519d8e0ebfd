# -*- coding: utf-8 -*-
from decimal import Decimal
from itertools import islice

import pytest
from hypothesis import given

from moodal.formula import (
    Happy,
    HappyDeg,
    Implies,
    Knows,
    Nec,
    Not,
    SadDeg,
    Var,
    conjunction,
    enumerate_formulas,
)
from moodal.syntax.parser import parse_formula
from moodal.syntax.printer import print_formula
from tests.strategies import formulas

p, q, r = Var("p"), Var("q"), Var("r")


class TestPrintFormula(object):
    @pytest.mark.parametrize(
        "formula,expected",
        [
            pytest.param(Happy("a", p), "H[a] p", id="happy"),
            pytest.param(Not(p), "!p", id="negation"),
            pytest.param(Implies(p, Implies(q, r)), "p -> q -> r", id="right nested"),
            pytest.param(Implies(Implies(p, q), r), "(p -> q) -> r", id="left nested"),
            pytest.param(Nec(Implies(p, q)), "N (p -> q)", id="modal over implication"),
            pytest.param(Not(Not(p)), "!!p", id="double negation"),
            pytest.param(Knows("b", Not(p)), "K[b] !p", id="knows"),
            pytest.param(HappyDeg("s", 2, p), "H[s;2] p", id="integral degree"),
            pytest.param(SadDeg("s", Decimal("0.50"), p), "S[s;0.50] p", id="decimal"),
            pytest.param(
                conjunction(p, q), "!(p -> !q)", id="derived connectives stay expanded"
            ),
        ],
    )
    def test_print_formula(self, formula, expected):
        assert print_formula(formula) == expected

    def test_print_rejects_foreign_objects(self):
        with pytest.raises(TypeError):
            print_formula(object())


class TestRoundTrip(object):
    @given(formulas(degrees=True))
    def test_random_formulas_round_trip(self, formula):
        assert parse_formula(print_formula(formula)) == formula

    @given(formulas(max_leaves=30))
    def test_deep_random_formulas_round_trip(self, formula):
        assert parse_formula(print_formula(formula)) == formula

    def test_enumerated_formulas_round_trip(self):
        for formula in enumerate_formulas(["p", "q"], ["a", "b"], 2):
            assert parse_formula(print_formula(formula)) == formula

    @pytest.mark.slow
    def test_enumerated_formulas_round_trip_to_depth_three(self):
        for formula in enumerate_formulas(["p"], ["a"], 3):
            assert parse_formula(print_formula(formula)) == formula

    @pytest.mark.slow
    def test_enumerated_formulas_round_trip_at_depth_four(self):
        stream = enumerate_formulas(["p"], ["a"], 4)
        deepest = [formula for formula in islice(stream, 20000) if formula.depth == 4]
        assert deepest
        for formula in deepest:
            assert parse_formula(print_formula(formula)) == formula
