# -*- coding: utf-8 -*-
from moodal.model.graph import close_preferences, to_dot  # noqa: F401
from moodal.model.models import (  # noqa: F401
    BaseModel,
    EpistemicModel,
    GoodnessModel,
    UtilityModel,
)
from moodal.model.transforms import (  # noqa: F401
    converse,
    good_worlds_from_utilities,
    preferences_from_utilities,
    set_prec,
)
from moodal.model.validation import ValidationReport, Violation, validate  # noqa: F401
