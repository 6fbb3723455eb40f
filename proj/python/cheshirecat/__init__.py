"""Python interface to the cheshire C++ core."""

from ._cheshire import *  # noqa: F401,F403
from ._cheshire import __doc__  # noqa: F401
