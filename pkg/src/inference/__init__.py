"""
Inference Package - Exact Topological Inference
===============================================

Topological distance between step functions and its exact, asymptotic and
permutation p-values.

Usage:
    from inference import compare, InferenceMethod

    result = compare(diagram_a, diagram_b, methods=(InferenceMethod.EXACT,))
    print(result.summary())
"""

from .distance import area_difference, topo_distance, topo_distance_exact
from .exact import (
    CountingMethod, count_band_paths, enumerate_paths_bruteforce, exact_pvalue, row_band
)
from .asymptotic import SeriesForm, asymptotic_pvalue, kolmogorov_tail, scaled_statistic
from .permutation import PermutationSummary, permutation_pvalue
from .result import InferenceResult, load_result, result_to_json, save_result
from .compare import (
    DEFAULT_METHODS, InferenceMethod, SequenceMode, compare, comparison_functions, parse_methods
)

__all__ = [
    # Distance
    'topo_distance', 'topo_distance_exact', 'area_difference',

    # Exact null distribution
    'CountingMethod', 'exact_pvalue', 'count_band_paths', 'enumerate_paths_bruteforce', 'row_band',

    # Asymptotics
    'SeriesForm', 'asymptotic_pvalue', 'kolmogorov_tail', 'scaled_statistic',

    # Permutation baseline
    'PermutationSummary', 'permutation_pvalue',

    # Results and pipeline
    'InferenceResult', 'result_to_json', 'save_result', 'load_result',
    'InferenceMethod', 'SequenceMode', 'DEFAULT_METHODS', 'parse_methods',
    'comparison_functions', 'compare',
]
