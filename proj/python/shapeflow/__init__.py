"""Convex-polygon shape evolution under squash affinities.

The heavy lifting lives in the compiled extension; this package re-exports
its public surface.
"""

from shapeflow._core import *  # noqa: F401,F403
from shapeflow._core import __doc__  # noqa: F401

__version__ = "0.1.0"
