# -*- coding: utf-8 -*-
from moodal.semantics.evaluator import (  # noqa: F401
    Evaluator,
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
from moodal.semantics.verdict import TraceEntry, Verdict  # noqa: F401
