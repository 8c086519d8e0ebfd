# -*- coding: utf-8 -*-

import logging
import warnings
import sys

if sys.version_info < (3, 8):
    from importlib_metadata import version, PackageNotFoundError
else:
    from importlib.metadata import version, PackageNotFoundError

__author__ = "Moodal Developers"

try:
    __version__ = version(__package__ or __name__)
except PackageNotFoundError:  # pragma: no cover
    __version__ = "0.0.0"


# Set up logging to ``/dev/null`` like a library is supposed to.
# http://docs.python.org/3.3/howto/logging.html#configuring-logging-for-a-library
class NullHandler(logging.Handler):  # pragma: no cover
    def emit(self, record):
        pass


if not sys.warnoptions:
    warnings.filterwarnings("default", category=DeprecationWarning, module="moodal")

logging.getLogger("moodal").addHandler(NullHandler())
