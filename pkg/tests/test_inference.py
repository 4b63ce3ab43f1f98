import math
from fractions import Fraction

import numpy as np
import pytest

from conftest import random_dm
from inference import (
    InferenceMethod, InferenceResult, PermutationSummary, asymptotic_pvalue, area_difference,
    compare, count_band_paths, enumerate_paths_bruteforce, exact_pvalue, kolmogorov_tail,
    load_result, parse_methods, permutation_pvalue, save_result, scaled_statistic, topo_distance,
    topo_distance_exact
)
from lattice import StepFunction
from persistence import PersistenceDiagram, augment_h0, h0_persistence
from utils.errors import InvalidInputError, ResourceError, TieError, UsageError

SIZES = [(q1, q2) for q1 in range(1, 14) for q2 in range(1, 14) if q1 + q2 <= 14]


def oracle_pvalue(q1, q2, d):
    return float(1 - Fraction(enumerate_paths_bruteforce(q1, q2, d), math.comb(q1 + q2, q1)))


def step(*breakpoints):
    return StepFunction(tuple(breakpoints))


def test_topo_distance_identical():
    f = step(0.1, 0.4, 0.9)
    assert topo_distance(f, f) == 0.0


def test_topo_distance_disjoint_single_steps():
    assert topo_distance(step(0.2), step(0.8)) == 1.0


def test_topo_distance_exact_fraction():
    f1 = step(0.1, 0.5)
    f2 = step(0.2, 0.3, 0.4)
    # at t = 0.1: 1/2 - 0 ; at t = 0.4: 1/2 - 1 ; the largest gap is 1/2
    assert topo_distance_exact(f1, f2) == Fraction(1, 2)


def test_area_difference():
    assert area_difference(step(0.2), step(0.8)) == pytest.approx(0.6)
    assert area_difference(step(0.3, 0.6), step(0.3, 0.6)) == 0.0


def test_area_difference_bounded_by_distance():
    rng = np.random.default_rng(3)
    for _ in range(50):
        f1 = step(*np.sort(rng.uniform(0, 1, int(rng.integers(1, 9)))))
        f2 = step(*np.sort(rng.uniform(0, 1, int(rng.integers(1, 9)))))
        assert area_difference(f1, f2) <= topo_distance(f1, f2) + 1e-12


@pytest.mark.parametrize("q1,q2,d,expected", [
    (1, 1, 1.5, 2),
    (1, 1, 0.5, 0),
    (2, 1, 0.6, 1),
    (2, 2, 0.6, 4),
])
def test_bruteforce_small_counts(q1, q2, d, expected):
    assert enumerate_paths_bruteforce(q1, q2, d) == expected


def test_bruteforce_budget():
    with pytest.raises(ResourceError):
        enumerate_paths_bruteforce(13, 12, 0.5)


def test_exact_two_by_two():
    assert exact_pvalue(2, 2, 0.6) == pytest.approx(1 / 3)


@pytest.mark.parametrize("q1,q2", SIZES)
@pytest.mark.parametrize("d", [0.1, 0.25, 0.5, 0.75])
def test_exact_matches_bruteforce(q1, q2, d):
    assert exact_pvalue(q1, q2, d) == oracle_pvalue(q1, q2, d)


@pytest.mark.slow
@pytest.mark.parametrize("q1,q2", SIZES)
def test_exact_matches_bruteforce_fine_grid(q1, q2):
    for k in range(1, 121):
        d = k / 100
        assert exact_pvalue(q1, q2, d) == oracle_pvalue(q1, q2, d)


@pytest.mark.parametrize("q1,q2", [(1, 1), (3, 7), (20, 20)])
def test_exact_above_one_is_zero(q1, q2):
    assert exact_pvalue(q1, q2, 1.01) == 0.0
    assert count_band_paths(q1, q2, 1.01) == math.comb(q1 + q2, q1)


def test_exact_at_zero_is_one():
    assert exact_pvalue(5, 6, 0) == 1.0


@pytest.mark.parametrize("q1,q2", [(5, 9), (12, 12), (30, 17)])
def test_exact_monotone_in_distance(q1, q2):
    grid = [k / 50 for k in range(0, 55)]
    values = [exact_pvalue(q1, q2, d) for d in grid]
    assert all(a >= b for a, b in zip(values, values[1:]))


@pytest.mark.parametrize("q1,q2,d", [(4, 9, 0.3), (11, 6, 0.45), (40, 25, 0.2)])
def test_exact_symmetric(q1, q2, d):
    assert exact_pvalue(q1, q2, d) == exact_pvalue(q2, q1, d)


@pytest.mark.parametrize("q1,q2,d", [(300, 250, 0.1), (120, 120, Fraction(7, 120)), (50, 800, 0.05)])
def test_float_counting_matches_integers(q1, q2, d):
    exact = exact_pvalue(q1, q2, d, method="integer")
    approx = exact_pvalue(q1, q2, d, method="float")
    assert approx == pytest.approx(exact, rel=1e-9, abs=1e-12)


def test_exact_rejects_bad_sizes():
    with pytest.raises(InvalidInputError):
        exact_pvalue(0, 3, 0.5)
    with pytest.raises(InvalidInputError):
        exact_pvalue(True, 3, 0.5)


def test_asymptotic_zero_distance():
    assert asymptotic_pvalue(10, 10, 0.0) == 1.0


def test_asymptotic_five_percent_point():
    assert kolmogorov_tail(1.36) == pytest.approx(0.049, abs=0.001)
    d = 1.36 / math.sqrt(500 * 500 / 1000)
    assert asymptotic_pvalue(500, 500, d) == pytest.approx(0.049, abs=0.001)


def test_asymptotic_small_argument_is_continuous():
    below = kolmogorov_tail(0.5 - 1e-9)
    above = kolmogorov_tail(0.5 + 1e-9)
    assert below == pytest.approx(above, abs=1e-6)
    assert kolmogorov_tail(0.5) == pytest.approx(0.9639, abs=1e-4)
    assert kolmogorov_tail(0.1) == pytest.approx(1.0)


def test_asymptotic_literal_form():
    x = 1.36
    literal = kolmogorov_tail(x, "literal")
    assert literal == pytest.approx(kolmogorov_tail(x) + 2 * (math.exp(-x * x) - math.exp(-2 * x * x)))
    assert 0.0 <= kolmogorov_tail(0.2, "literal") <= 1.0


def test_asymptotic_far_tail_underflows():
    assert asymptotic_pvalue(7604, 9768, 0.9) == 0.0


def test_scaled_statistic():
    assert scaled_statistic(8, 8, 0.5) == pytest.approx(1.0)


@pytest.mark.slow
def test_asymptotic_close_to_exact_for_large_samples():
    q = 500
    checked = 0
    for k in range(1, q + 1):
        exact = exact_pvalue(q, q, Fraction(k, q))
        if exact < 0.01:
            break
        if exact > 0.99:
            continue
        assert abs(asymptotic_pvalue(q, q, k / q) - exact) <= 0.02
        checked += 1
    assert checked > 20


def _sequences(rng, q1, q2):
    pooled = rng.permutation(np.arange(1, q1 + q2 + 1, dtype=float) + rng.uniform(0, 0.5, q1 + q2))
    return np.sort(pooled[:q1]), np.sort(pooled[q1:])


def test_permutation_is_deterministic():
    rng = np.random.default_rng(1)
    h1, h2 = _sequences(rng, 9, 7)
    a = permutation_pvalue(h1, h2, 2000, seed=5)
    b = permutation_pvalue(h1, h2, 2000, seed=5)
    assert a == b
    assert 0 < a.p <= 1
    assert a.to_dict() == {"p": a.p, "n_perm": 2000, "seed": 5}


def test_permutation_identical_groups():
    h = np.array([0.5, 1.0, 2.0])
    summary = permutation_pvalue(h, h, 100)
    assert summary.p == 1.0


def test_permutation_close_to_exact():
    rng = np.random.default_rng(17)
    h1, h2 = _sequences(rng, 8, 8)
    scale = max(h1[-1], h2[-1])
    d = topo_distance_exact(step(*(h1 / scale)), step(*(h2 / scale)))
    summary = permutation_pvalue(h1, h2, 50_000, seed=0)
    assert summary.p == pytest.approx(exact_pvalue(8, 8, d), abs=0.02)


def test_permutation_tie_handling():
    with pytest.raises(TieError, match="--jitter"):
        permutation_pvalue([0.0, 1.0, 2.0], [0.0, 1.5, 2.0], 10)
    summary = permutation_pvalue([0.0, 1.0, 3.0], [0.0, 2.0, 4.0], 10)
    assert 0 < summary.p <= 1


@pytest.mark.parametrize("h1,h2,n_perm", [
    ([1.0, 0.5], [1.0, 2.0], 10),
    ([], [1.0], 10),
    ([1.0], [2.0], 0),
])
def test_permutation_rejects_bad_input(h1, h2, n_perm):
    with pytest.raises(InvalidInputError):
        permutation_pvalue(h1, h2, n_perm)


def test_parse_methods():
    assert parse_methods("exact, permutation,exact") == (InferenceMethod.EXACT,
                                                          InferenceMethod.PERMUTATION)
    with pytest.raises(UsageError):
        parse_methods("exact,bootstrap")
    with pytest.raises(UsageError):
        parse_methods(" , ")


def test_compare_with_itself():
    diagram = PersistenceDiagram(dim=1, pairs=((1.0, 4.0), (2.0, 3.0), (2.5, 6.0)))
    result = compare(diagram, diagram)
    assert result.d_stat == 0.0
    assert result.p_exact == 1.0
    assert result.p_asymptotic == 1.0
    assert result.p_permutation is None
    assert result.provenance["sequence"] == "h-prime"


def test_compare_death_sequences():
    a = PersistenceDiagram(dim=1, pairs=((0.5, 1.0), (0.6, 2.0)))
    b = PersistenceDiagram(dim=1, pairs=((0.5, 3.0), (0.7, 4.0)))
    result = compare(a, b, methods=("exact", "permutation"), mode="deaths", n_perm=200)
    assert result.d_stat == 1.0
    assert result.p_exact == pytest.approx(1 - 4 / 6)
    assert result.p_permutation.n_perm == 200
    assert result.provenance["delta_a"] is None


@pytest.mark.parametrize("seed", range(5))
def test_compare_h0_against_bruteforce(seed):
    rng = np.random.default_rng(300 + seed)
    a = augment_h0(h0_persistence(random_dm(rng, 8)))
    b = augment_h0(h0_persistence(random_dm(rng, 8)))
    result = compare(a, b, methods=("exact",))
    assert 0.0 <= result.p_exact <= 1.0
    numerator, denominator = result.provenance["d_fraction"]
    assert result.p_exact == oracle_pvalue(7, 7, Fraction(numerator, denominator))


def test_result_json_round_trip(tmp_path):
    result = InferenceResult(q1=3, q2=4, d_stat=0.5, d_scaled=scaled_statistic(3, 4, 0.5),
                             p_exact=0.25, p_permutation=PermutationSummary(0.3, 99, 1),
                             provenance={"sequence": "h-prime"})
    path = tmp_path / "r.json"
    save_result(result, path)
    loaded = load_result(path)
    assert loaded == result
    assert "permutation p-value" in loaded.summary()


def test_result_validates_probabilities():
    with pytest.raises(InvalidInputError):
        InferenceResult(q1=1, q2=1, d_stat=0.5, d_scaled=0.5, p_exact=1.5)
