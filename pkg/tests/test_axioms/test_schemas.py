# -*- coding: utf-8 -*-
import pytest

from moodal.axioms.schemas import (
    ALL_SCHEMAS,
    DERIVED_SCHEMAS,
    AxiomFamily,
    AxiomSchema,
    instantiate,
    select_schemas,
)
from moodal.exceptions import ArityMismatchError, MoodalException
from moodal.formula import Happy, Implies, Knows, Nec, Not, Sad, Var
from moodal.syntax.parser import parse_formula

p, q = Var("p"), Var("q")


class TestAxiomSchema(object):
    def test_schema_counts(self):
        assert len(ALL_SCHEMAS) == 21
        assert len(DERIVED_SCHEMAS) == 4
        assert not any(schema.family.derived for schema in ALL_SCHEMAS)

    def test_generic_families_have_both_emotions(self):
        names = [schema.name for schema in ALL_SCHEMAS]
        assert "truth-e[H]" in names
        assert "truth-e[S]" in names
        assert "emotional-consistency" in names

    def test_names_are_unique(self):
        names = [schema.name for schema in ALL_SCHEMAS + DERIVED_SCHEMAS]
        assert len(names) == len(set(names))

    def test_generic_family_needs_emotion(self):
        with pytest.raises(MoodalException):
            AxiomSchema(AxiomFamily.TRUTH_E)

    def test_specific_family_rejects_emotion(self):
        with pytest.raises(MoodalException):
            AxiomSchema(AxiomFamily.TRUTH_K, "H")

    def test_str(self):
        assert str(AxiomSchema(AxiomFamily.COHERENCE_SAME, "S")) == "coherence-same[S]"


class TestSelectSchemas(object):
    @pytest.mark.parametrize(
        "names,expected",
        [
            pytest.param(["truth-k"], ["truth-k"], id="family"),
            pytest.param(["truth-e[S]"], ["truth-e[S]"], id="variant"),
            pytest.param(["truth-e"], ["truth-e[H]", "truth-e[S]"], id="generic family"),
            pytest.param(
                ["coherence"],
                ["coherence-same[H]", "coherence-same[S]", "coherence-opposite"],
                id="group",
            ),
            pytest.param(
                ["truth-k", "truth-n"], ["truth-n", "truth-k"], id="catalogue order"
            ),
            pytest.param(["truth-k", "truth-k"], ["truth-k"], id="no repeats"),
            pytest.param(
                ["positive-introspection"],
                ["positive-introspection-n", "positive-introspection-k"],
                id="derived group",
            ),
        ],
    )
    def test_select_schemas(self, names, expected):
        assert [schema.name for schema in select_schemas(names)] == expected

    def test_unknown_name_raises(self):
        with pytest.raises(MoodalException) as excinfo:
            select_schemas(["truth-x"])
        assert "truth-k" in str(excinfo.value)

    def test_pool_restricts_matches(self):
        with pytest.raises(MoodalException):
            select_schemas(["emotion-knowledge"], ALL_SCHEMAS)


class TestInstantiate(object):
    @pytest.mark.parametrize(
        "name,agent,slots,expected",
        [
            pytest.param("truth-n", None, (p,), Implies(Nec(p), p), id="truth n"),
            pytest.param("truth-k", "a", (p,), Implies(Knows("a", p), p), id="truth k"),
            pytest.param(
                "truth-e[S]", "a", (p,), Implies(Sad("a", p), p), id="truth sad"
            ),
            pytest.param(
                "emotional-consistency",
                "a",
                (p,),
                Implies(Happy("a", p), Not(Sad("a", p))),
                id="consistency",
            ),
            pytest.param(
                "coherence-same[H]",
                "a",
                (p, q),
                parse_formula("Nbar H[a] p & Nbar H[a] q -> N (p -> q) | N (q -> p)"),
                id="coherence same",
            ),
            pytest.param(
                "coherence-opposite",
                "a",
                (p, q),
                parse_formula("Nbar H[a] p & Nbar S[a] q -> N (p -> !q) | N (!q -> p)"),
                id="coherence opposite",
            ),
            pytest.param(
                "predictability-h",
                "a",
                (p,),
                parse_formula("Nbar H[a] p | Nbar S[a] !p -> K[a] p -> H[a] p"),
                id="predictability",
            ),
            pytest.param(
                "substitution[H]",
                "a",
                (p, q),
                parse_formula("N (p <-> q) -> H[a] p -> H[a] q"),
                id="substitution",
            ),
            pytest.param(
                "emotion-knowledge[S]",
                "a",
                (p,),
                Implies(Sad("a", p), Knows("a", p)),
                id="emotion knowledge",
            ),
        ],
    )
    def test_instantiate(self, name, agent, slots, expected):
        (schema,) = select_schemas([name])
        assert instantiate(schema, agent, *slots) == expected
        assert schema.instantiate(agent, *slots) == expected

    def test_wrong_arity_raises(self):
        (schema,) = select_schemas(["truth-k"])
        with pytest.raises(ArityMismatchError):
            instantiate(schema, "a", p, q)
        (schema,) = select_schemas(["distributivity-n"])
        with pytest.raises(ArityMismatchError):
            instantiate(schema, None, p)

    def test_missing_agent_raises(self):
        (schema,) = select_schemas(["truth-k"])
        with pytest.raises(ArityMismatchError):
            instantiate(schema, None, p)
