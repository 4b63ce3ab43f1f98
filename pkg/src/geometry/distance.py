from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import pdist, squareform

from utils.errors import DuplicatePointError, InvalidInputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DistanceMatrix:
    """Dense symmetric matrix of pairwise Euclidean distances in angstrom"""

    d: np.ndarray

    def __post_init__(self):
        d = np.asarray(self.d)
        if d.ndim != 2 or d.shape[0] != d.shape[1]:
            raise InvalidInputError(f"Distance matrix must be square, got {d.shape}")
        d.setflags(write=False)
        object.__setattr__(self, "d", d)

    @property
    def n(self):
        return self.d.shape[0]

    @classmethod
    def from_array(cls, array, dtype=np.float64):
        """Build a matrix from a square array, checking the invariants

        Raises:
            InvalidInputError: If the array is not symmetric with zero diagonal
            DuplicatePointError: If an off-diagonal entry is zero
        """
        d = np.array(array, dtype=dtype, copy=True)
        if d.ndim != 2 or d.shape[0] != d.shape[1]:
            raise InvalidInputError(f"Distance matrix must be square, got {d.shape}")
        if np.any(np.diag(d) != 0) or not np.array_equal(d, d.T):
            raise InvalidInputError("Distance matrix must be symmetric with a zero diagonal")
        if np.any(d < 0) or not np.all(np.isfinite(d)):
            raise InvalidInputError("Distances must be finite and nonnegative")
        _check_distinct(squareform(d, checks=False))
        return cls(d)


def _check_distinct(condensed):
    zero = np.flatnonzero(condensed == 0)
    if zero.size:
        n = int(round((1 + np.sqrt(1 + 8 * condensed.size)) / 2))
        i, j = _condensed_to_pair(int(zero[0]), n)
        raise DuplicatePointError(
            f"Points {i} and {j} coincide ({zero.size} duplicate pair(s)); "
            "rerun with --jitter to break ties")


def _condensed_to_pair(k, n):
    i = 0
    while k >= n - 1 - i:
        k -= n - 1 - i
        i += 1
    return i, i + 1 + k


def distance_matrix(cloud, dtype=np.float64):
    """Pairwise Euclidean distances of a point cloud.

    Each distance is computed once and mirrored, so the result is exactly
    symmetric with a zero diagonal.

    Args:
        cloud (PointCloud): Input cloud
        dtype: np.float64 or np.float32 storage

    Returns:
        DistanceMatrix: Dense n x n matrix

    Raises:
        DuplicatePointError: If two points coincide
    """
    condensed = pdist(cloud.points, metric="euclidean")
    _check_distinct(condensed)
    d = squareform(condensed.astype(dtype, copy=False), checks=False)
    logger.debug("Distance matrix %dx%d (%s)", d.shape[0], d.shape[1], np.dtype(dtype).name)
    return DistanceMatrix(d)


def enclosing_radius(dm):
    """Smallest radius beyond which the Rips complex is a cone.

    Returns:
        float: min over i of max over j of d[i][j] (0 for a single point)
    """
    if dm.n < 2:
        return 0.0
    return float(np.min(np.max(dm.d, axis=1)))
