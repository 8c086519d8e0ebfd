# -*- coding: utf-8 -*-
from moodal.axioms.schemas import (  # noqa: F401
    ALL_SCHEMAS,
    DERIVED_SCHEMAS,
    AxiomFamily,
    AxiomSchema,
    instantiate,
    select_schemas,
)
from moodal.axioms.sweep import (  # noqa: F401
    SoundnessReport,
    derived_fact_sweep,
    goodness_coherence_counterexample,
    rule_preservation_check,
    soundness_sweep,
)
