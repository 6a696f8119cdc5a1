"""Geometrically exact Cosserat rod finite elements on SE(3)."""

from _rodsim import *  # noqa: F401,F403
