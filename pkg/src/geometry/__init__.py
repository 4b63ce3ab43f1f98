"""
Geometry Package - Point Clouds and Distances
=============================================

Reads molecular structures and generic coordinate files into point clouds and
builds their pairwise distance matrices.

Usage:
    from geometry import load_point_cloud, distance_matrix, Selection

    cloud = load_point_cloud("6vxx.pdb", selection=Selection.parse("chain:B"))
    dm = distance_matrix(cloud)
"""

from .point_cloud import AtomLabel, PointCloud, jitter
from .selection import AtomSelection, Selection
from .pdb_parser import parse_pdb
from .csv_parser import parse_xyz_csv
from .parser_factory import CloudFormat, ParserFactory, load_point_cloud
from .distance import DistanceMatrix, distance_matrix, enclosing_radius

__all__ = [
    # Types
    'AtomLabel', 'PointCloud', 'DistanceMatrix',

    # Selection policies
    'AtomSelection', 'Selection',

    # Parsing
    'parse_pdb', 'parse_xyz_csv', 'CloudFormat', 'ParserFactory', 'load_point_cloud',

    # Operations
    'jitter', 'distance_matrix', 'enclosing_radius',
]
