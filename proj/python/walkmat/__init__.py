"""Exact toolkit for walk matrices, rooted products with paths, and
Chebyshev resultant identities."""

from walkmat._core import *  # noqa: F401,F403
from walkmat._core import __version__  # noqa: F401
