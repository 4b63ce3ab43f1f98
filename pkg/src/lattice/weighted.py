from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from typing import Optional, Tuple

import numpy as np

from lattice.paths import LatticePath, Step, dyck_word
from utils.constants import STRICTIFY_SCALE_FRACTION
from utils.errors import InvalidDeltaError, InvalidInputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeightedLatticePath:
    """Lattice path whose k-th right step ends at b_(k) and k-th up step at d_(k)"""

    births: Tuple[float, ...]
    deaths: Tuple[float, ...]
    path: LatticePath

    def __post_init__(self):
        births = tuple(float(b) for b in self.births)
        deaths = tuple(float(d) for d in self.deaths)
        if len(births) != len(deaths) or len(births) != self.path.q:
            raise InvalidInputError("Births, deaths and path must describe the same q")
        for seq, name in ((births, "births"), (deaths, "deaths")):
            if any(not a < b for a, b in zip(seq, seq[1:])):
                raise InvalidInputError(f"Weighted lattice path {name} must be strictly increasing")
        # The interleaving of births and deaths must reproduce the steps.
        merged = sorted([(b, Step.RIGHT) for b in births] + [(d, Step.UP) for d in deaths],
                        key=lambda event: event[0])
        if tuple(step for _, step in merged) != self.path.steps:
            raise InvalidInputError("Births and deaths do not interleave as the path says")
        object.__setattr__(self, "births", births)
        object.__setattr__(self, "deaths", deaths)

    @property
    def q(self):
        return len(self.births)


def weighted_lattice_path(process):
    """Weight the lattice path of a birth-death process with its values"""
    return WeightedLatticePath(tuple(process.births), tuple(process.deaths), dyck_word(process))


@dataclass(frozen=True)
class BoxAreaSequence:
    """Box areas under a weighted lattice path, before and after strictification

    Args:
        h (tuple): Nondecreasing areas, h[0] = 0
        h_strict (tuple): Strictly increasing areas, None until strictified
        delta (float): Strictification increment (0 when h had no repeats)
        order (tuple): Index permutation applied when the raw areas were not
            monotone: h[k] is raw area order[k]
        reordered (bool): True when the raw areas had to be sorted
        offsets (tuple): h_strict[k] - h[k], None until strictified
    """

    h: Tuple[float, ...]
    h_strict: Optional[Tuple[float, ...]] = None
    delta: float = 0.0
    order: Optional[Tuple[int, ...]] = None
    reordered: bool = False
    offsets: Optional[Tuple[float, ...]] = None

    @property
    def q(self):
        return len(self.h)


def box_areas(wlp):
    """Areas of the boxes traversed by a weighted lattice path.

    h_1 = 0 and h_(i+1) = (b_(i+1) - b_(i)) * (d_(i+1) - d_(i)). The formula does
    not guarantee monotonicity; non-monotone areas are sorted, the permutation is
    kept so the encoding stays invertible, and a warning is logged.

    Args:
        wlp (WeightedLatticePath): Weighted path

    Returns:
        BoxAreaSequence: h filled, h_strict left empty
    """
    births = np.asarray(wlp.births)
    deaths = np.asarray(wlp.deaths)
    raw = np.concatenate([[0.0], np.diff(births) * np.diff(deaths)])
    order = np.argsort(raw, kind="stable")
    reordered = bool(np.any(order != np.arange(raw.size)))
    if reordered:
        logger.warning("Box areas are not monotone for q=%d; sorted before building the step function",
                       raw.size)
    return BoxAreaSequence(
        h=tuple(float(v) for v in raw[order]),
        order=tuple(int(i) for i in order),
        reordered=reordered,
    )


def _runs(h):
    """(start, length) of each maximal run of equal values"""
    runs = []
    start = 0
    for i in range(1, len(h) + 1):
        if i == len(h) or h[i] != h[start]:
            runs.append((start, i - start))
            start = i
    return runs


def _run_bound(h, start, length):
    """Largest admissible increment for one run: 1/r, and (r-1)*delta below the next gap"""
    bound = 1.0 / length
    end = start + length
    if end < len(h):
        bound = min(bound, (h[end] - h[start]) / length)
    return bound


def default_strictify_delta(h):
    """Default increment: min over runs of 1/r and gap/(2r), capped by 1e-6 * max(h)"""
    runs = [(s, r) for s, r in _runs(h) if r > 1]
    if not runs:
        return 0.0
    delta = min(_run_bound(h, s, r) / 2 if s + r < len(h) else _run_bound(h, s, r) for s, r in runs)
    scale = max(h) * STRICTIFY_SCALE_FRACTION
    if scale > 0:
        delta = min(delta, scale)
    return delta


def strictify(bas, delta=None):
    """Make box areas strictly increasing.

    Each maximal run of r equal areas receives offsets delta * (0, 1, ..., r - 1).

    Args:
        bas (BoxAreaSequence or sequence): Nondecreasing areas starting at 0
        delta (float): Increment; ``default_strictify_delta`` when None

    Returns:
        BoxAreaSequence: With h_strict, offsets and delta filled

    Raises:
        InvalidInputError: If h is empty, not nondecreasing or does not start at 0
        InvalidDeltaError: If delta exceeds 1/r or would overtake the next value
    """
    if not isinstance(bas, BoxAreaSequence):
        bas = BoxAreaSequence(h=tuple(float(v) for v in bas))
    h = list(bas.h)
    if not h:
        raise InvalidInputError("Cannot strictify an empty sequence")
    if h[0] != 0:
        raise InvalidInputError(f"Box areas must start at 0, got {h[0]}")
    if any(b < a for a, b in zip(h, h[1:])):
        raise InvalidInputError("Box areas must be nondecreasing before strictification")

    runs = [(s, r) for s, r in _runs(h) if r > 1]
    if delta is None:
        delta = default_strictify_delta(h)
    elif runs:
        if not delta > 0:
            raise InvalidDeltaError(f"Strictification delta must be positive, got {delta}")
        for start, length in runs:
            limit = 1.0 / length
            if delta > limit:
                raise InvalidDeltaError(
                    f"delta={delta:g} exceeds 1/r={limit:g} for a run of {length} equal areas")
            end = start + length
            if end < len(h) and (length - 1) * delta >= h[end] - h[start]:
                raise InvalidDeltaError(
                    f"delta={delta:g} would overtake the next area {h[end]:g} "
                    f"from a run of {length} at {h[start]:g}")

    offsets = [0.0] * len(h)
    for start, length in runs:
        for k in range(length):
            offsets[start + k] = k * delta
    h_strict = tuple(v + o for v, o in zip(h, offsets))
    return replace(bas, h_strict=h_strict, delta=float(delta if runs else 0.0),
                   offsets=tuple(offsets))
