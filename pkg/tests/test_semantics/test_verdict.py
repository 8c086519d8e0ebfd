# -*- coding: utf-8 -*-
from moodal.formula import Happy, Var
from moodal.semantics.verdict import TraceEntry, Verdict

gift = Var("gift")


class TestTraceEntry(object):
    def test_str_without_witness(self):
        entry = TraceEntry(gift, "w", "boolean", True)
        assert str(entry) == "gift at w: holds [boolean]"

    def test_str_with_witness(self):
        entry = TraceEntry(Happy("p", gift), "t", "a", False, ("v",))
        assert str(entry) == "H[p] gift at t: fails [a] witness v"

    def test_to_dict_omits_empty_witness(self):
        assert TraceEntry(gift, "w", "boolean", True).to_dict() == {
            "formula": "gift",
            "world": "w",
            "condition": "boolean",
            "outcome": True,
        }

    def test_to_dict_lists_witness(self):
        entry = TraceEntry(Happy("p", gift), "(R,R)", "b", False, ("(I,I)", "(I,R)"))
        assert entry.to_dict()["witness"] == ["(I,I)", "(I,R)"]


class TestVerdict(object):
    def setup_method(self, test_method):
        self.trace = (
            TraceEntry(Happy("p", gift), "t", "a", False, ("v",)),
            TraceEntry(gift, "v", "boolean", False),
        )

    def test_truthiness(self):
        assert Verdict(True, gift, "w")
        assert not Verdict(False, gift, "t")

    def test_str_without_trace(self):
        assert str(Verdict(True, gift, "w")) == "holds"

    def test_str_with_trace(self):
        verdict = Verdict(False, Happy("p", gift), "t", self.trace)
        assert str(verdict) == (
            "fails\n"
            "  H[p] gift at t: fails [a] witness v\n"
            "  gift at v: fails [boolean]"
        )

    def test_to_dict(self):
        verdict = Verdict(False, Happy("p", gift), "t", self.trace)
        result = verdict.to_dict()
        assert result["holds"] is False
        assert result["formula"] == "H[p] gift"
        assert len(result["trace"]) == 2

    def test_to_dict_without_trace_has_no_trace_key(self):
        assert "trace" not in Verdict(True, gift, "w").to_dict()
