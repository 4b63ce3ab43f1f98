"""
Rips Persistence
================

0-cycles from the minimum spanning tree of the complete distance graph and
1-cycles from Z/2 column reduction of the triangle-over-edge boundary matrix.
"""

import logging

import numpy as np
from scipy.sparse.csgraph import minimum_spanning_tree

from geometry.distance import enclosing_radius
from persistence.diagram import PersistenceDiagram
from persistence.filtration import rips_filtration
from utils.constants import H0_DELTA_FRACTION
from utils.errors import InvalidDeltaError, InvalidInputError

logger = logging.getLogger(__name__)


class UnionFind:
    """Disjoint sets over vertex indices with path halving"""

    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a, b):
        """Merge the sets of a and b

        Returns:
            bool: True if they were in different sets
        """
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra < rb:
            ra, rb = rb, ra
        self.parent[ra] = rb
        return True


def h0_persistence(dm, max_eps=None):
    """0-dimensional persistence of the Rips filtration.

    Every component is born at 0; the deaths are the minimum spanning tree
    edge weights. The component that never dies is counted as dropped, as is
    any merge above ``max_eps`` when a ceiling is given.

    Args:
        dm (DistanceMatrix): Pairwise distances
        max_eps (float): Optional filtration ceiling

    Returns:
        PersistenceDiagram: n - 1 pairs (0, death) when untruncated
    """
    if dm.n == 1:
        return PersistenceDiagram(dim=0, pairs=(), dropped_infinite=1, max_eps=max_eps)

    mst = minimum_spanning_tree(np.asarray(dm.d, dtype=np.float64))
    deaths = np.sort(mst.data)
    if deaths.size != dm.n - 1:
        raise InvalidInputError("Distance graph is not connected; check for zero distances")

    dropped = 1
    if max_eps is not None:
        kept = deaths[deaths <= max_eps]
        dropped += deaths.size - kept.size
        deaths = kept

    return PersistenceDiagram(
        dim=0,
        pairs=tuple((0.0, float(death)) for death in deaths),
        dropped_infinite=int(dropped),
        max_eps=None if max_eps is None else float(max_eps),
    )


def negative_edges(filtration):
    """Mark edges that merge two components when added in filtration order"""
    components = UnionFind(filtration.n)
    negative = np.zeros(filtration.edge_count, dtype=bool)
    for index, (i, j) in enumerate(filtration.edge_vertices.tolist()):
        negative[index] = components.union(i, j)
    return negative


def reduce_boundary(filtration, negative=None):
    """Pair positive edges with the triangles that kill their cycles.

    Columns are reduced left to right over Z/2. Rows of negative edges are
    removed first: such an edge is never the lowest entry of a reduced column.

    Args:
        filtration (SimplexFiltration): Sorted edges and triangles
        negative (np.ndarray): Negative-edge mask, computed when None

    Returns:
        list: (edge index, triangle index) pivot pairs, zero-length ones included
    """
    if negative is None:
        negative = negative_edges(filtration)
    keep = ~negative
    pivot_columns = {}
    pivots = []
    for t, edges in enumerate(filtration.triangle_edges.tolist()):
        column = {e for e in edges if keep[e]}
        while column:
            low = max(column)
            other = pivot_columns.get(low)
            if other is None:
                pivot_columns[low] = column
                pivots.append((low, t))
                break
            column ^= other
    return pivots


def h1_persistence(dm, max_eps=None, budget=None):
    """1-dimensional persistence of the Rips filtration with Z/2 coefficients.

    Args:
        dm (DistanceMatrix): Pairwise distances
        max_eps (float): Filtration ceiling, the enclosing radius when None
        budget (int): Triangle budget, None for no limit

    Returns:
        PersistenceDiagram: Finite pairs with birth < death; cycles still alive at
        max_eps are counted in dropped_infinite

    Raises:
        InvalidInputError: If max_eps is not positive
        ResourceError: If the triangle count exceeds the budget
    """
    if max_eps is None:
        max_eps = enclosing_radius(dm)
        if max_eps <= 0:
            return PersistenceDiagram(dim=1, pairs=(), dropped_infinite=0, max_eps=None)
    if not max_eps > 0:
        raise InvalidInputError(f"max_eps must be positive, got {max_eps}")

    filtration = rips_filtration(dm, max_eps, budget=budget)
    negative = negative_edges(filtration)
    pivots = reduce_boundary(filtration, negative)

    pairs = []
    for edge, triangle in pivots:
        birth = float(filtration.edge_values[edge])
        death = float(filtration.triangle_values[triangle])
        if death > birth:
            pairs.append((birth, death))

    positive = filtration.edge_count - int(np.count_nonzero(negative))
    dropped = positive - len(pivots)
    logger.debug("H1: %d edges (%d positive), %d triangles, %d pairs, %d unpaired",
                  filtration.edge_count, positive, filtration.triangle_count, len(pairs), dropped)

    return PersistenceDiagram(
        dim=1,
        pairs=tuple(pairs),
        dropped_infinite=int(dropped),
        max_eps=float(max_eps),
        provenance={"edges": filtration.edge_count, "triangles": filtration.triangle_count},
    )


def default_delta(diagram):
    """Default augmentation increment: a small fraction of the smallest death"""
    if diagram.q == 0:
        raise InvalidInputError("Cannot choose an augmentation delta for an empty diagram")
    return H0_DELTA_FRACTION * min(diagram.deaths)


def augment_h0(diagram, delta=None):
    """Spread the births of a 0-dimensional diagram to make them distinct.

    The i-th pair in order of death becomes ((i - 1) * delta, d_(i)).

    Args:
        diagram (PersistenceDiagram): 0-dimensional diagram with all births 0
        delta (float): Increment, ``default_delta`` when None

    Returns:
        PersistenceDiagram: Diagram with births 0, delta, 2 delta, ...

    Raises:
        InvalidInputError: If the diagram is not an all-zero-birth H0 diagram
        InvalidDeltaError: If (q - 1) * delta reaches the smallest death
    """
    if diagram.dim != 0:
        raise InvalidInputError("augment_h0 expects a 0-dimensional diagram")
    if any(b != 0 for b in diagram.births):
        raise InvalidInputError("augment_h0 expects every birth to be 0")
    if diagram.q == 0:
        return diagram
    if delta is None:
        delta = default_delta(diagram)
    deaths = sorted(diagram.deaths)
    if not delta > 0 or (diagram.q - 1) * delta >= deaths[0]:
        raise InvalidDeltaError(
            f"delta={delta:g} is invalid: need 0 < (q-1)*delta < {deaths[0]:g} with q={diagram.q}")

    provenance = dict(diagram.provenance)
    provenance["augment_delta"] = float(delta)
    return PersistenceDiagram(
        dim=0,
        pairs=tuple((i * delta, death) for i, death in enumerate(deaths)),
        dropped_infinite=diagram.dropped_infinite,
        max_eps=diagram.max_eps,
        provenance=provenance,
    )
