"""Decide, with certificates, whether the Bestvina-Brady group of a graph is a RAAG."""

from .graph import SimplicialGraph
from .fixtures import fixture, fixture_tree
from .recognition import recognize

__all__ = ["SimplicialGraph", "fixture", "fixture_tree", "recognize"]
__version__ = "0.1.0"
