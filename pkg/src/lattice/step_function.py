"""
Step Functions
==============

The monotone step function phi built from strictified box areas. Breakpoints
t_j = h'_j / scale lie in [0, 1]; phi counts the breakpoints at or below t, so
phi / q behaves like an empirical distribution function. phi(0) is 0 by
convention even though the first breakpoint sits at 0.

``encode`` and ``recover_diagram`` are inverse to each other on (sorted births,
sorted deaths). Box areas only carry products of birth and death gaps, so the
encoding keeps the sorted births and the first death alongside the
breakpoints.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from lattice.paths import to_birth_death_process
from lattice.weighted import box_areas, strictify, weighted_lattice_path
from persistence.diagram import PersistenceDiagram
from utils.errors import EmptyDiagramError, InvalidInputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PathEncoding:
    """What a step function needs to rebuild its birth-death process"""

    dim: int
    births: Tuple[float, ...]
    first_death: float
    order: Tuple[int, ...]
    offsets: Tuple[float, ...]
    dropped_infinite: int = 0
    max_eps: Optional[float] = None


@dataclass(frozen=True)
class StepFunction:
    """Nondecreasing integer step function on [0, 1]

    Args:
        breakpoints (tuple): Strictly increasing t_1 < ... < t_q in [0, 1]
        scale (float): Normalization: t_j = h'_j / scale
        delta (float): Strictification increment used
        encoding (PathEncoding): Inverse data, None for functions built from bare sequences
    """

    breakpoints: Tuple[float, ...]
    scale: float = 1.0
    delta: float = 0.0
    encoding: Optional[PathEncoding] = None

    def __post_init__(self):
        breakpoints = tuple(float(t) for t in self.breakpoints)
        if not breakpoints:
            raise EmptyDiagramError("A step function needs at least one breakpoint")
        if any(not a < b for a, b in zip(breakpoints, breakpoints[1:])):
            raise InvalidInputError("Breakpoints must be strictly increasing")
        if breakpoints[0] < 0 or breakpoints[-1] > 1:
            raise InvalidInputError("Breakpoints must lie in [0, 1]")
        object.__setattr__(self, "breakpoints", breakpoints)

    @property
    def q(self):
        return len(self.breakpoints)

    def evaluate(self, t):
        """phi(t): number of breakpoints at or below t, with phi(0) = 0

        Args:
            t (float or array): Points in [0, 1]

        Returns:
            int or np.ndarray: Step values
        """
        t_arr = np.asarray(t, dtype=np.float64)
        values = np.searchsorted(np.asarray(self.breakpoints), t_arr, side="right")
        values = np.where(t_arr <= 0, 0, values)
        if values.ndim == 0:
            return int(values)
        return values

    def normalized(self, t):
        """phi(t) / q"""
        return self.evaluate(t) / self.q

    def rows(self):
        """(t_j, j) at every breakpoint"""
        return [(t, j) for j, t in enumerate(self.breakpoints, start=1)]


def step_function(bas, q=None, scale=None):
    """Build phi from strictified box areas.

    Args:
        bas (BoxAreaSequence): Sequence with h_strict filled
        q (int): Expected step count, len(h_strict) when None
        scale (float): Normalization, h'_q when None; pass a common scale to
            keep two functions comparable

    Returns:
        StepFunction: Breakpoints h'_j / scale

    Raises:
        EmptyDiagramError: If q is 0
        InvalidInputError: If h_strict is missing, not strictly increasing or above scale
    """
    h_strict = bas.h_strict
    if h_strict is None:
        raise InvalidInputError("Box areas must be strictified before building a step function")
    if q is None:
        q = len(h_strict)
    if q == 0 or not h_strict:
        raise EmptyDiagramError("Cannot build a step function for an empty diagram")
    if q != len(h_strict):
        raise InvalidInputError(f"q={q} does not match {len(h_strict)} box areas")
    if scale is None:
        scale = h_strict[-1]
    if not scale > 0:
        # q == 1: the single area is 0 and phi jumps at t = 0.
        scale = 1.0
    if h_strict[-1] > scale:
        raise InvalidInputError(f"Scale {scale:g} is smaller than the largest area {h_strict[-1]:g}")
    return StepFunction(tuple(min(v / scale, 1.0) for v in h_strict), scale=float(scale),
                        delta=bas.delta)


def strictified_areas(diagram, delta=None):
    """Box areas of a diagram, strictified

    Raises:
        EmptyDiagramError: If the diagram has no pairs
        TieError: If birth or death values coincide
    """
    if diagram.q == 0:
        raise EmptyDiagramError(
            f"The {diagram.dim}-dimensional diagram has no finite pairs; nothing to encode")
    process = to_birth_death_process(diagram)
    return process, strictify(box_areas(weighted_lattice_path(process)), delta)


def encode(diagram, delta=None, scale=None):
    """Encode a diagram as a step function that can be inverted.

    Args:
        diagram (PersistenceDiagram): Diagram with q >= 1 and distinct values
        delta (float): Strictification increment, default when None
        scale (float): Normalization scale, h'_q when None

    Returns:
        StepFunction: phi with its PathEncoding attached
    """
    process, bas = strictified_areas(diagram, delta)
    births = process.births
    deaths = process.deaths
    encoding = PathEncoding(
        dim=diagram.dim,
        births=tuple(births),
        first_death=deaths[0],
        order=bas.order,
        offsets=bas.offsets,
        dropped_infinite=diagram.dropped_infinite,
        max_eps=diagram.max_eps,
    )
    step = step_function(bas, scale=scale)
    return StepFunction(step.breakpoints, scale=step.scale, delta=step.delta, encoding=encoding)


def recover_diagram(step):
    """Invert ``encode``.

    Deaths are rebuilt from the box areas: each area divided by its birth gap is
    the matching death gap. Births and deaths are paired in sorted order.

    Args:
        step (StepFunction): Output of ``encode``

    Returns:
        PersistenceDiagram: Pairs (b_(i), d_(i))

    Raises:
        InvalidInputError: If the step function carries no encoding
    """
    enc = step.encoding
    if enc is None:
        raise InvalidInputError("Step function has no path encoding to invert")
    h_strict = np.asarray(step.breakpoints) * step.scale
    h_sorted = h_strict - np.asarray(enc.offsets)
    raw = np.empty_like(h_sorted)
    raw[np.asarray(enc.order, dtype=np.int64)] = h_sorted

    births = np.asarray(enc.births)
    gaps = np.diff(births)
    deaths = enc.first_death + np.concatenate([[0.0], np.cumsum(raw[1:] / gaps)])
    return PersistenceDiagram(
        dim=enc.dim,
        pairs=tuple(zip(births.tolist(), deaths.tolist())),
        dropped_infinite=enc.dropped_infinite,
        max_eps=enc.max_eps,
    )
