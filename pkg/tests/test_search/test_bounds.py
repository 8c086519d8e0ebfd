# -*- coding: utf-8 -*-
import pytest

from moodal.context import DEFAULT_CAP
from moodal.exceptions import SearchBoundsError
from moodal.search.bounds import SearchBounds
from moodal.syntax.parser import parse_formula


class TestSearchBounds(object):
    def test_defaults(self):
        bounds = SearchBounds()
        assert bounds.max_worlds == 3
        assert bounds.min_worlds == 1
        assert bounds.agents == ("a",)
        assert bounds.variables == ("p",)
        assert bounds.max_formula_depth == 3
        assert bounds.cap == DEFAULT_CAP

    def test_lists_become_tuples(self):
        bounds = SearchBounds(agents=["a", "b"], variables=["p"])
        assert bounds.agents == ("a", "b")
        assert bounds.variables == ("p",)

    @pytest.mark.parametrize(
        "kwargs",
        [
            pytest.param({"min_worlds": 0}, id="no worlds"),
            pytest.param({"min_worlds": 3, "max_worlds": 2}, id="inverted range"),
            pytest.param({"agents": ()}, id="no agents"),
            pytest.param({"variables": ()}, id="no variables"),
            pytest.param({"agents": ("a", "a")}, id="repeated agent"),
            pytest.param({"max_formula_depth": -1}, id="negative depth"),
            pytest.param({"cap": 0}, id="zero cap"),
        ],
    )
    def test_malformed_bounds_raise(self, kwargs):
        with pytest.raises(SearchBoundsError):
            SearchBounds(**kwargs)

    def test_for_formula_uses_formula_signature(self):
        bounds = SearchBounds.for_formula(parse_formula("H[b] q & K[a] p"), max_worlds=2)
        assert bounds.agents == ("a", "b")
        assert bounds.variables == ("p", "q")
        assert bounds.max_worlds == 2

    def test_for_formula_falls_back_to_defaults(self):
        bounds = SearchBounds.for_formula(parse_formula("q"))
        assert bounds.agents == ("a",)
        assert bounds.variables == ("q",)

    def test_explicit_signature_wins(self):
        bounds = SearchBounds.for_formula(parse_formula("q"), variables=("p", "q"))
        assert bounds.variables == ("p", "q")

    def test_to_dict(self):
        assert SearchBounds(max_worlds=2, cap=10).to_dict() == {
            "min_worlds": 1,
            "max_worlds": 2,
            "agents": ["a"],
            "vars": ["p"],
            "max_formula_depth": 3,
            "cap": 10,
        }
