"""
Diagram Comparison
==================

Builds the two compared sequences on a common scale, measures the topological
distance and runs the requested p-value methods.
"""

import logging
import time
from enum import Enum

from inference.asymptotic import SeriesForm, asymptotic_pvalue, scaled_statistic
from inference.distance import topo_distance_exact
from inference.exact import exact_pvalue
from inference.permutation import permutation_pvalue
from inference.result import InferenceResult
from lattice.step_function import StepFunction, step_function, strictified_areas
from utils.constants import DEFAULT_N_PERM, DEFAULT_PERMUTATION_SEED
from utils.errors import EmptyDiagramError, TieError, UsageError

logger = logging.getLogger(__name__)


class SequenceMode(Enum):
    """Which sequence of each diagram is compared"""
    H_PRIME = "h-prime"  # strictified box areas
    DEATHS = "deaths"  # sorted death values


class InferenceMethod(Enum):
    """p-value methods"""
    EXACT = "exact"
    ASYMPTOTIC = "asymptotic"
    PERMUTATION = "permutation"


DEFAULT_METHODS = (InferenceMethod.EXACT, InferenceMethod.ASYMPTOTIC)


def parse_methods(text):
    """Parse a comma-separated method list such as ``exact,asymptotic``

    Raises:
        UsageError: On an empty list or unknown method
    """
    names = [name.strip().lower() for name in (text or "").split(",") if name.strip()]
    if not names:
        raise UsageError("At least one inference method is required")
    methods = []
    for name in names:
        try:
            method = InferenceMethod(name)
        except ValueError:
            valid = ", ".join(m.value for m in InferenceMethod)
            raise UsageError(f"Unknown inference method '{name}' (expected {valid})") from None
        if method not in methods:
            methods.append(method)
    return tuple(methods)


def _sorted_deaths(diagram):
    deaths = sorted(diagram.deaths)
    for a, b in zip(deaths, deaths[1:]):
        if a == b:
            raise TieError(f"Tied death value {a}; rerun persist with --jitter")
    return deaths


def comparison_functions(diag_a, diag_b, mode=SequenceMode.H_PRIME.value, delta=None):
    """Step functions of two diagrams on a common normalization scale.

    Args:
        diag_a (PersistenceDiagram): First diagram
        diag_b (PersistenceDiagram): Second diagram
        mode (str): "h-prime" or "deaths"
        delta (float): Strictification increment for h-prime mode

    Returns:
        tuple: (f_a, f_b, seq_a, seq_b, scale) where seq_* are the unnormalized sequences

    Raises:
        EmptyDiagramError: If either diagram has no pairs
    """
    mode = SequenceMode(mode)
    for name, diagram in (("first", diag_a), ("second", diag_b)):
        if diagram.q == 0:
            raise EmptyDiagramError(f"The {name} diagram has no finite pairs")

    if mode is SequenceMode.H_PRIME:
        _, bas_a = strictified_areas(diag_a, delta)
        _, bas_b = strictified_areas(diag_b, delta)
        seq_a, seq_b = list(bas_a.h_strict), list(bas_b.h_strict)
        scale = max(seq_a[-1], seq_b[-1])
        if not scale > 0:
            scale = 1.0
        return step_function(bas_a, scale=scale), step_function(bas_b, scale=scale), seq_a, seq_b, scale

    seq_a, seq_b = _sorted_deaths(diag_a), _sorted_deaths(diag_b)
    scale = max(seq_a[-1], seq_b[-1])
    f_a = StepFunction(tuple(v / scale for v in seq_a), scale=scale)
    f_b = StepFunction(tuple(v / scale for v in seq_b), scale=scale)
    return f_a, f_b, seq_a, seq_b, scale


def compare(diag_a, diag_b, methods=DEFAULT_METHODS, mode=SequenceMode.H_PRIME.value, delta=None,
            n_perm=DEFAULT_N_PERM, seed=DEFAULT_PERMUTATION_SEED,
            series=SeriesForm.KOLMOGOROV.value):
    """Test the topological equivalence of two diagrams.

    Args:
        diag_a (PersistenceDiagram): First diagram
        diag_b (PersistenceDiagram): Second diagram
        methods (tuple): InferenceMethod members to run
        mode (str): Compared sequence, "h-prime" or "deaths"
        delta (float): Strictification increment, default when None
        n_perm (int): Permutations for the permutation method
        seed (int): Permutation seed
        series (str): Asymptotic series form

    Returns:
        InferenceResult: Distance, p-values and provenance
    """
    methods = tuple(InferenceMethod(m) for m in methods)
    f_a, f_b, seq_a, seq_b, scale = comparison_functions(diag_a, diag_b, mode, delta)
    q1, q2 = f_a.q, f_b.q

    d_exact = topo_distance_exact(f_a, f_b)
    d_stat = float(d_exact)
    d_scaled = scaled_statistic(q1, q2, d_stat)
    timings = {}

    p_exact = p_asymptotic = p_permutation = None
    if InferenceMethod.EXACT in methods:
        started = time.perf_counter()
        p_exact = exact_pvalue(q1, q2, d_exact)
        timings["exact"] = time.perf_counter() - started
    if InferenceMethod.ASYMPTOTIC in methods:
        p_asymptotic = asymptotic_pvalue(q1, q2, d_stat, series)
    if InferenceMethod.PERMUTATION in methods:
        started = time.perf_counter()
        p_permutation = permutation_pvalue(seq_a, seq_b, n_perm, seed)
        timings["permutation"] = time.perf_counter() - started

    logger.info("D = %.6g for q1=%d, q2=%d", d_stat, q1, q2)
    for name, seconds in timings.items():
        logger.info("%s p-value computed in %.3f s", name, seconds)
    h_prime = SequenceMode(mode) is SequenceMode.H_PRIME
    provenance = {
        "sequence": SequenceMode(mode).value,
        "scale": scale,
        "delta_a": f_a.delta if h_prime else None,
        "delta_b": f_b.delta if h_prime else None,
        "series": SeriesForm(series).value,
        "d_fraction": [d_exact.numerator, d_exact.denominator],
    }
    return InferenceResult(q1=q1, q2=q2, d_stat=d_stat, d_scaled=d_scaled, p_exact=p_exact,
                           p_asymptotic=p_asymptotic, p_permutation=p_permutation,
                           provenance=provenance)
