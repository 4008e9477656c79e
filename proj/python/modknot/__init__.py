"""Modular knots and their lifts to cyclic covers of the trefoil complement."""

from ._modknot import *  # noqa: F401,F403
from ._modknot import __doc__  # noqa: F401
