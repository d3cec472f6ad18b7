"""Co-occurrence analytics toolkit: Python surface of the C++ core."""

from ._cooc import *  # noqa: F401,F403
from ._cooc import __doc__  # noqa: F401

__version__ = "0.1.0"
