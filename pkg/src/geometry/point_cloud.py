from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from typing import Optional, Tuple

import numpy as np

from utils.constants import DEFAULT_JITTER_SEED
from utils.errors import InvalidInputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AtomLabel:
    """Per-atom metadata read from a PDB ATOM record"""

    serial: int
    name: str
    residue_name: str
    residue_number: int
    chain: str
    element: str = ""


@dataclass(frozen=True)
class PointCloud:
    """Labeled 3D coordinates in angstrom

    Args:
        points (np.ndarray): (n, 3) float64 coordinates, read-only
        labels (tuple): Optional AtomLabel per point
        source (str): Provenance string (usually the file name)
        provenance (dict): Selection policy, jitter and other preprocessing notes
    """

    points: np.ndarray
    labels: Optional[Tuple[AtomLabel, ...]] = None
    source: str = ""
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        points = np.array(self.points, dtype=np.float64, copy=True)
        if points.ndim != 2 or points.shape[1] != 3:
            raise InvalidInputError(f"Point cloud must have shape (n, 3), got {points.shape}")
        if points.shape[0] < 1:
            raise InvalidInputError("Point cloud must contain at least one point")
        if not np.all(np.isfinite(points)):
            raise InvalidInputError("Point cloud coordinates must be finite")
        if self.labels is not None and len(self.labels) != points.shape[0]:
            raise InvalidInputError(
                f"Got {len(self.labels)} labels for {points.shape[0]} points")
        points.setflags(write=False)
        object.__setattr__(self, "points", points)
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "provenance", dict(self.provenance))

    def __len__(self):
        return self.points.shape[0]

    @property
    def n(self):
        return self.points.shape[0]


def jitter(cloud, sigma, seed=DEFAULT_JITTER_SEED):
    """Break coordinate ties by adding uniform noise in [-sigma, sigma].

    Args:
        cloud (PointCloud): Input cloud
        sigma (float): Noise magnitude in angstrom
        seed (int): Generator seed, recorded in provenance

    Returns:
        PointCloud: New cloud with perturbed coordinates
    """
    if not sigma > 0:
        raise InvalidInputError(f"Jitter magnitude must be positive, got {sigma}")
    rng = np.random.default_rng(seed)
    noise = rng.uniform(-sigma, sigma, size=cloud.points.shape)
    provenance = dict(cloud.provenance)
    provenance["jitter"] = {"sigma": float(sigma), "seed": int(seed)}
    logger.info("Applied jitter sigma=%g seed=%d to %d points", sigma, seed, cloud.n)
    return replace(cloud, points=cloud.points + noise, provenance=provenance)
