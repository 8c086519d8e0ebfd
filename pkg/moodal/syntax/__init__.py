# -*- coding: utf-8 -*-
from moodal.syntax.loader import (  # noqa: F401
    check_model,
    dump_model,
    load_model,
    load_model_file,
    model_from_dict,
    model_to_dict,
    resolve_model,
)
from moodal.syntax.parser import parse_formula  # noqa: F401
from moodal.syntax.printer import print_formula  # noqa: F401
