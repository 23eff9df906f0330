"""Halin graphs: annotation, rooting and the coloring dynamic programs."""

from .cubic import cubic_halin_index, cubic_strong_colorable
from .general import InterfaceDP, TypePartitionState, halin_index, halin_strong_colorable
from .structure import (HalinAnnotation, HalinError, RootedHalin, boundary_edges, halin_from_tree,
                        root_halin, tree_of, validate_halin)

__all__ = [
    "HalinAnnotation", "HalinError", "InterfaceDP", "RootedHalin", "TypePartitionState",
    "boundary_edges", "cubic_halin_index", "cubic_strong_colorable", "halin_from_tree",
    "halin_index", "halin_strong_colorable", "root_halin", "tree_of", "validate_halin",
]
