"""
Exact Null Distribution
=======================

Under the null both sequences are exchangeable, so every interleaving of the
pooled order statistics is one of C(q1 + q2, q1) equally likely monotone lattice
paths from (0, 0) to (q1, q2). P(D >= d) is one minus the share of paths whose
every cell (u, v) stays inside the band |u/q1 - v/q2| < d.

The band test is done in exact rational arithmetic: with B = d * q1 * q2 a cell
is inside when |u * q2 - v * q1| < B.
"""

import itertools
import logging
import math
from bisect import bisect_left
from enum import Enum
from fractions import Fraction
from functools import lru_cache

import numpy as np

from utils.constants import BRUTEFORCE_BUDGET, EXACT_INTEGER_CUTOVER
from utils.errors import InvalidInputError, ResourceError

logger = logging.getLogger(__name__)


class CountingMethod(Enum):
    """Arithmetic used by the band dynamic program"""
    AUTO = "auto"
    INTEGER = "integer"
    FLOAT = "float"


def _check_sizes(q1, q2):
    for name, q in (("q1", q1), ("q2", q2)):
        if isinstance(q, bool) or not isinstance(q, (int, np.integer)) or q < 1:
            raise InvalidInputError(f"{name} must be a positive integer, got {q!r}")
    return int(q1), int(q2)


def band_width(d, q1, q2):
    """B = d * q1 * q2 as an exact fraction"""
    return Fraction(d) * q1 * q2


def row_band(u, q1, q2, bound):
    """Inclusive range of v with |u*q2 - v*q1| < bound, clipped to [0, q2]

    Returns:
        tuple: (lo, hi); lo > hi when the row has no cell inside the band
    """
    lo = math.floor(Fraction(u * q2 - bound, q1)) + 1
    hi = math.ceil(Fraction(u * q2 + bound, q1)) - 1
    return max(lo, 0), min(hi, q2)


def count_band_paths(q1, q2, d):
    """Number A of monotone paths from (0, 0) to (q1, q2) inside the band, exactly.

    A[u][v] = A[u-1][v] + A[u][v-1] on cells inside the band and 0 outside, so
    each row is a running sum of the previous one over the row's band.

    Args:
        q1 (int): Steps in the first direction
        q2 (int): Steps in the second direction
        d (float or Fraction): Band half-width

    Returns:
        int: Path count
    """
    q1, q2 = _check_sizes(q1, q2)
    if Fraction(d) <= 0:
        return 0
    if q2 > q1:
        q1, q2 = q2, q1
    bound = band_width(d, q1, q2)

    row = [0] * (q2 + 1)
    lo, hi = row_band(0, q1, q2, bound)
    for v in range(lo, hi + 1):
        row[v] = 1
    for u in range(1, q1 + 1):
        lo, hi = row_band(u, q1, q2, bound)
        if lo > hi:
            return 0
        new_row = [0] * (q2 + 1)
        new_row[lo:hi + 1] = itertools.accumulate(row[lo:hi + 1])
        row = new_row
    return row[q2]


def _log_band_paths(q1, q2, d):
    """log A by the same recursion in floating point, renormalizing every row"""
    if q2 > q1:
        q1, q2 = q2, q1
    bound = band_width(d, q1, q2)

    row = np.zeros(q2 + 1)
    lo, hi = row_band(0, q1, q2, bound)
    row[lo:hi + 1] = 1.0
    log_scale = 0.0
    for u in range(1, q1 + 1):
        lo, hi = row_band(u, q1, q2, bound)
        if lo > hi:
            return -math.inf
        new_row = np.zeros(q2 + 1)
        new_row[lo:hi + 1] = np.cumsum(row[lo:hi + 1])
        peak = new_row[lo:hi + 1].max()
        if peak <= 0:
            return -math.inf
        new_row /= peak
        log_scale += math.log(peak)
        row = new_row
    if row[q2] <= 0:
        return -math.inf
    return math.log(row[q2]) + log_scale


def log_binomial(n, k):
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


def exact_pvalue(q1, q2, d, method=CountingMethod.AUTO.value):
    """P(D >= d) under the null of topological equivalence.

    Args:
        q1 (int): First sample size
        q2 (int): Second sample size
        d (float or Fraction): Observed distance; pass the exact fraction from
            ``topo_distance_exact`` so the band sits exactly on the observation
        method (str): "integer" for exact big-integer counts, "float" for
            renormalized floating point, "auto" for integers while
            q1 + q2 <= 2000

    Returns:
        float: 1 - A / C(q1 + q2, q1), in [0, 1]
    """
    q1, q2 = _check_sizes(q1, q2)
    method = CountingMethod(method)
    d = Fraction(d)
    if d <= 0:
        return 1.0
    if d > 1:
        return 0.0

    if method is CountingMethod.AUTO:
        method = CountingMethod.INTEGER if q1 + q2 <= EXACT_INTEGER_CUTOVER else CountingMethod.FLOAT

    if method is CountingMethod.INTEGER:
        count = count_band_paths(q1, q2, d)
        return float(1 - Fraction(count, math.comb(q1 + q2, q1)))

    log_count = _log_band_paths(q1, q2, d)
    if log_count == -math.inf:
        return 1.0
    p = -math.expm1(log_count - log_binomial(q1 + q2, q1))
    return min(max(p, 0.0), 1.0)


@lru_cache(maxsize=64)
def _path_deviations(q1, q2):
    """Sorted max |u*q2 - v*q1| of every monotone path, by exhaustive enumeration"""
    n = q1 + q2
    deviations = []
    for rights in itertools.combinations(range(n), q1):
        right_steps = set(rights)
        u = v = 0
        worst = 0
        for position in range(n):
            if position in right_steps:
                u += 1
            else:
                v += 1
            worst = max(worst, abs(u * q2 - v * q1))
        deviations.append(worst)
    deviations.sort()
    return tuple(deviations)


def enumerate_paths_bruteforce(q1, q2, d):
    """Count in-band paths by listing all C(q1 + q2, q1) of them.

    Args:
        q1 (int): First sample size
        q2 (int): Second sample size
        d (float or Fraction): Band half-width

    Returns:
        int: Number of paths whose every cell satisfies |u/q1 - v/q2| < d

    Raises:
        ResourceError: If q1 + q2 exceeds the enumeration budget
    """
    q1, q2 = _check_sizes(q1, q2)
    if q1 + q2 > BRUTEFORCE_BUDGET:
        raise ResourceError(
            f"Brute-force enumeration is limited to q1 + q2 <= {BRUTEFORCE_BUDGET}, got {q1 + q2}")
    return bisect_left(_path_deviations(q1, q2), band_width(d, q1, q2))
