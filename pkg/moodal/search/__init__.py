# -*- coding: utf-8 -*-
from moodal.search.bounds import SearchBounds  # noqa: F401
from moodal.search.enumeration import enumerate_models, isomorphic  # noqa: F401
from moodal.search.report import (  # noqa: F401
    Distinguished,
    Equivalent,
    Exhausted,
    SearchReport,
    SeparatingPair,
    WitnessFound,
)
from moodal.search.search import (  # noqa: F401
    check_pair_equivalence,
    dual_witness,
    find_model,
    find_separating_pair,
)
