"""Approximate diameters of weighted planar graphs.

The main entry point is :func:`approximate_diameter`, which returns a
value between the true diameter ``d`` and ``(1 + eps) d``.
"""

from .driver import RunConfig, RunReport, approximate_diameter
from .graph import EmbeddedGraph, build, embed_by_coordinates, validate
from .oracle import exact_diameter, exact_set_diameter

__all__ = [
    "EmbeddedGraph",
    "RunConfig",
    "RunReport",
    "approximate_diameter",
    "build",
    "embed_by_coordinates",
    "exact_diameter",
    "exact_set_diameter",
    "validate",
]
__version__ = "0.1.0"
