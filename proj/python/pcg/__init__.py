"""Packing chromatic number and packing coloring gap toolkit."""

from ._pcg import *  # noqa: F401,F403
from ._pcg import __doc__  # noqa: F401

__version__ = "0.1.0"
