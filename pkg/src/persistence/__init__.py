"""
Persistence Package - Vietoris-Rips Persistent Homology
=======================================================

Persistence diagrams of 0-cycles and 1-cycles from a distance matrix.

Usage:
    from persistence import h0_persistence, h1_persistence, augment_h0

    h0 = augment_h0(h0_persistence(dm))
    h1 = h1_persistence(dm, max_eps=12.0)
"""

from .diagram import PersistenceDiagram, diagram_to_json, load_diagram, save_diagram
from .filtration import SimplexFiltration, count_triangles, rips_filtration
from .homology import (
    UnionFind, augment_h0, default_delta, h0_persistence, h1_persistence,
    negative_edges, reduce_boundary
)

__all__ = [
    # Diagrams
    'PersistenceDiagram', 'diagram_to_json', 'load_diagram', 'save_diagram',

    # Filtration
    'SimplexFiltration', 'count_triangles', 'rips_filtration',

    # Homology
    'UnionFind', 'h0_persistence', 'h1_persistence', 'negative_edges', 'reduce_boundary',
    'augment_h0', 'default_delta',
]
