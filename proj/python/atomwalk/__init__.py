"""Coherent walking of two-level atoms in a travelling light field."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
