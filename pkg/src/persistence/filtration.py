"""
Rips Filtration
===============

Edges and triangles of the Vietoris-Rips complex truncated at ``max_eps``, in
filtration order. A simplex enters at the largest pairwise distance among its
vertices; ties are broken by lexicographic vertex order, so every edge precedes
the triangles it bounds.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from utils.errors import InvalidInputError, ResourceError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SimplexFiltration:
    """Edges and triangles sorted by filtration value

    Args:
        n (int): Vertex count
        max_eps (float): Filtration ceiling
        edge_vertices (np.ndarray): (m, 2) vertex pairs, i < j
        edge_values (np.ndarray): (m,) edge lengths, nondecreasing
        triangle_vertices (np.ndarray): (t, 3) vertex triples, i < j < k
        triangle_values (np.ndarray): (t,) triangle diameters, nondecreasing
        triangle_edges (np.ndarray): (t, 3) filtration indices of each triangle's edges
    """

    n: int
    max_eps: float
    edge_vertices: np.ndarray
    edge_values: np.ndarray
    triangle_vertices: np.ndarray
    triangle_values: np.ndarray
    triangle_edges: np.ndarray

    @property
    def edge_count(self):
        return int(self.edge_values.shape[0])

    @property
    def triangle_count(self):
        return int(self.triangle_values.shape[0])


def _neighbourhoods(adjacency):
    n = adjacency.shape[0]
    for i in range(n):
        above = np.flatnonzero(adjacency[i, i + 1:]) + i + 1
        if above.size >= 2:
            yield i, above


def count_triangles(adjacency):
    """Number of 3-cliques in a boolean adjacency matrix"""
    total = 0
    for _, above in _neighbourhoods(adjacency):
        total += int(np.count_nonzero(np.triu(adjacency[np.ix_(above, above)], 1)))
    return total


def rips_filtration(dm, max_eps, budget=None):
    """Build the truncated Rips filtration up to triangles.

    Args:
        dm (DistanceMatrix): Pairwise distances
        max_eps (float): Filtration ceiling; simplices with diameter above it are left out
        budget (int): Maximum number of triangles, None for no limit

    Returns:
        SimplexFiltration: Sorted edges and triangles

    Raises:
        InvalidInputError: If max_eps is not positive
        ResourceError: If the triangle count exceeds the budget
    """
    if not max_eps > 0:
        raise InvalidInputError(f"max_eps must be positive, got {max_eps}")

    d = np.asarray(dm.d, dtype=np.float64)
    n = d.shape[0]
    adjacency = d <= max_eps
    np.fill_diagonal(adjacency, False)

    iu, ju = np.nonzero(np.triu(adjacency, 1))
    values = d[iu, ju]
    order = np.lexsort((ju, iu, values))
    edge_vertices = np.stack([iu[order], ju[order]], axis=1).astype(np.int64)
    edge_values = values[order]

    t_count = count_triangles(adjacency)
    if budget is not None and t_count > budget:
        raise ResourceError(
            f"Rips filtration at max_eps={max_eps:g} has {t_count} triangles, above the budget "
            f"of {budget}; lower --max-eps or subsample the input")
    logger.debug("Filtration: %d vertices, %d edges, %d triangles", n, edge_values.size, t_count)

    tri = np.empty((t_count, 3), dtype=np.int64)
    filled = 0
    for i, above in _neighbourhoods(adjacency):
        a, b = np.nonzero(np.triu(adjacency[np.ix_(above, above)], 1))
        k = a.size
        if k:
            tri[filled:filled + k, 0] = i
            tri[filled:filled + k, 1] = above[a]
            tri[filled:filled + k, 2] = above[b]
            filled += k

    ti, tj, tk = tri[:, 0], tri[:, 1], tri[:, 2]
    tri_values = np.maximum(np.maximum(d[ti, tj], d[ti, tk]), d[tj, tk])
    t_order = np.lexsort((tk, tj, ti, tri_values))
    tri = tri[t_order]
    tri_values = tri_values[t_order]

    # Edge keys i*n+j are unique; map each triangle edge to its filtration index.
    edge_keys = edge_vertices[:, 0] * n + edge_vertices[:, 1]
    key_order = np.argsort(edge_keys, kind="stable")
    sorted_keys = edge_keys[key_order]

    def lookup(u, v):
        return key_order[np.searchsorted(sorted_keys, u * n + v)]

    triangle_edges = np.stack([
        lookup(tri[:, 0], tri[:, 1]),
        lookup(tri[:, 0], tri[:, 2]),
        lookup(tri[:, 1], tri[:, 2]),
    ], axis=1) if t_count else np.empty((0, 3), dtype=np.int64)

    return SimplexFiltration(
        n=n,
        max_eps=float(max_eps),
        edge_vertices=edge_vertices,
        edge_values=edge_values,
        triangle_vertices=tri,
        triangle_values=tri_values,
        triangle_edges=triangle_edges,
    )
