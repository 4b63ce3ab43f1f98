import logging
from dataclasses import dataclass

import numpy as np

from utils.constants import DEFAULT_PERMUTATION_SEED, PERMUTATION_BATCH
from utils.errors import InvalidInputError, TieError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PermutationSummary:
    """Resampled p-value with the settings that reproduce it"""

    p: float
    n_perm: int
    seed: int
    exceed: int = 0

    def to_dict(self):
        return {"p": self.p, "n_perm": self.n_perm, "seed": self.seed}


def _strictly_increasing(values, name):
    values = np.asarray(values, dtype=np.float64)
    if values.ndim != 1 or values.size == 0:
        raise InvalidInputError(f"{name} must be a nonempty 1-D sequence")
    if np.any(np.diff(values) <= 0):
        raise InvalidInputError(f"{name} must be strictly increasing")
    return values


def _max_deviation(labels, run_end, q1, q2):
    """max over run ends of |c1 * q2 - c2 * q1| for each row of group-1 labels"""
    c1 = np.cumsum(labels, axis=-1, dtype=np.int64)
    c2 = np.arange(1, labels.shape[-1] + 1, dtype=np.int64) - c1
    deviation = np.abs(c1 * q2 - c2 * q1)
    return deviation[..., run_end].max(axis=-1)


def permutation_pvalue(h1, h2, n_perm, seed=DEFAULT_PERMUTATION_SEED):
    """Permutation-test p-value of the topological distance.

    The pooled values are relabeled uniformly at random keeping the group sizes,
    and D is recomputed for each relabeling. Distances are compared as integers
    (c1 * q2 - c2 * q1) so equal distances are never split by rounding.

    Args:
        h1 (sequence): Strictly increasing first sequence
        h2 (sequence): Strictly increasing second sequence
        n_perm (int): Number of relabelings
        seed (int): Generator seed

    Returns:
        PermutationSummary: (1 + #{D_perm >= D_obs}) / (1 + n_perm)

    Raises:
        InvalidInputError: If n_perm < 1 or a sequence is not strictly increasing
        TieError: If the pooled values tie anywhere except a shared leading 0
            while the observed distance is positive
    """
    if int(n_perm) < 1:
        raise InvalidInputError(f"n_perm must be at least 1, got {n_perm}")
    n_perm = int(n_perm)
    h1 = _strictly_increasing(h1, "h1")
    h2 = _strictly_increasing(h2, "h2")
    q1, q2 = h1.size, h2.size

    pooled = np.concatenate([h1, h2])
    order = np.argsort(pooled, kind="stable")
    values = pooled[order]
    labels = (order < q1).astype(np.int64)
    run_end = np.append(values[1:] != values[:-1], True)

    observed = int(_max_deviation(labels, run_end, q1, q2))
    if observed == 0:
        return PermutationSummary(p=1.0, n_perm=n_perm, seed=int(seed), exceed=n_perm)

    tied = values[:-1][~run_end[:-1]]
    anchor_only = tied.size == 1 and tied[0] == 0 and h1[0] == 0 and h2[0] == 0
    if tied.size and not anchor_only:
        raise TieError(f"{tied.size} tied value(s) in the pooled sequences (first {tied[0]!r}); "
                       "rerun persist with --jitter")

    rng = np.random.default_rng(seed)
    exceed = 0
    remaining = n_perm
    while remaining:
        batch = min(remaining, PERMUTATION_BATCH)
        shuffled = rng.permuted(np.tile(labels, (batch, 1)), axis=1)
        exceed += int(np.count_nonzero(_max_deviation(shuffled, run_end, q1, q2) >= observed))
        remaining -= batch

    p = (1 + exceed) / (1 + n_perm)
    logger.debug("Permutation test: %d of %d relabelings reach the observed distance", exceed, n_perm)
    return PermutationSummary(p=p, n_perm=n_perm, seed=int(seed), exceed=exceed)
