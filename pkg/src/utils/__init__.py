"""Utilities."""

from . import console
from .random_graphs import random_connected_graph, random_family_spec, random_graph, random_tree

__all__ = [
    "console",
    "random_connected_graph",
    "random_family_spec",
    "random_graph",
    "random_tree",
]
