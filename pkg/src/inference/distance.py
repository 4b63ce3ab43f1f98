from fractions import Fraction

import numpy as np

from utils.errors import EmptyDiagramError


def _step_counts(f1, f2):
    """Merged breakpoints and both step counts just right of each of them"""
    if f1.q == 0 or f2.q == 0:
        raise EmptyDiagramError("Both step functions need at least one step")
    b1 = np.asarray(f1.breakpoints)
    b2 = np.asarray(f2.breakpoints)
    grid = np.union1d(b1, b2)
    c1 = np.searchsorted(b1, grid, side="right").astype(np.int64)
    c2 = np.searchsorted(b2, grid, side="right").astype(np.int64)
    return grid, c1, c2


def topo_distance_exact(f1, f2):
    """sup over t of |phi1(t)/q1 - phi2(t)/q2| as an exact fraction.

    Between breakpoints both functions are constant, so the supremum is taken
    over the values just right of each breakpoint; the left limits are the
    values at the previous breakpoint, and both functions are 0 before the
    first one.

    Args:
        f1 (StepFunction): First function
        f2 (StepFunction): Second function, on the same normalization scale

    Returns:
        Fraction: max |c1 * q2 - c2 * q1| / (q1 * q2)
    """
    _, c1, c2 = _step_counts(f1, f2)
    q1, q2 = f1.q, f2.q
    numerator = int(np.max(np.abs(c1 * q2 - c2 * q1)))
    return Fraction(numerator, q1 * q2)


def topo_distance(f1, f2):
    """Topological distance D between two step functions, in [0, 1]"""
    return float(topo_distance_exact(f1, f2))


def area_difference(f1, f2):
    """Integral over [0, 1] of |phi1/q1 - phi2/q2|, summed interval by interval"""
    grid, c1, c2 = _step_counts(f1, f2)
    widths = np.diff(np.append(grid, 1.0))
    heights = np.abs(c1 / f1.q - c2 / f2.q)
    return float(np.sum(widths * heights))
