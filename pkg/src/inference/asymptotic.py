import math
from enum import Enum

from utils.constants import SERIES_MAX_TERMS, SERIES_TOLERANCE
from utils.errors import InvalidInputError

# Below this scaled distance the alternating series needs many terms; the
# equivalent theta-function form converges in a handful.
_DUAL_FORM_THRESHOLD = 0.5


class SeriesForm(Enum):
    """Exponent progression of the limiting tail series"""
    KOLMOGOROV = "kolmogorov"  # 2 sum (-1)^(j-1) exp(-2 j^2 d^2)
    LITERAL = "literal"  # first exponent -d^2, then -2 j^2 d^2 for j >= 2


def scaled_statistic(q1, q2, d_stat):
    """d_o = sqrt(q1 q2 / (q1 + q2)) * D"""
    return math.sqrt(q1 * q2 / (q1 + q2)) * float(d_stat)


def _kolmogorov_small(x):
    # 1 - sqrt(2 pi)/x * sum_k exp(-(2k-1)^2 pi^2 / (8 x^2))
    total = 0.0
    k = 1
    while True:
        term = math.exp(-((2 * k - 1) ** 2) * math.pi ** 2 / (8 * x * x))
        total += term
        if term < SERIES_TOLERANCE or k >= SERIES_MAX_TERMS:
            break
        k += 1
    return 1.0 - math.sqrt(2 * math.pi) / x * total


def kolmogorov_tail(x, form=SeriesForm.KOLMOGOROV.value):
    """Limiting tail probability at scaled distance x, clamped to [0, 1]"""
    form = SeriesForm(form)
    if x <= 0:
        return 1.0
    if x < _DUAL_FORM_THRESHOLD:
        total = _kolmogorov_small(x)
    else:
        total = 0.0
        for j in range(1, SERIES_MAX_TERMS + 1):
            term = 2.0 * math.exp(-2 * j * j * x * x)
            total += term if j % 2 == 1 else -term
            if term < SERIES_TOLERANCE:
                break
    if form is SeriesForm.LITERAL:
        # Swap the first term 2 e^(-2 x^2) for 2 e^(-x^2).
        total += 2.0 * (math.exp(-x * x) - math.exp(-2 * x * x))
    return min(max(total, 0.0), 1.0)


def asymptotic_pvalue(q1, q2, d_stat, form=SeriesForm.KOLMOGOROV.value):
    """Large-sample p-value of an observed topological distance.

    Args:
        q1 (int): First sample size
        q2 (int): Second sample size
        d_stat (float): Observed D
        form (str): "kolmogorov" (default) or "literal" first-term variant

    Returns:
        float: 2 e^(-2 d_o^2) - 2 e^(-8 d_o^2) + ..., clamped to [0, 1]
    """
    if q1 < 1 or q2 < 1:
        raise InvalidInputError(f"Sample sizes must be positive, got q1={q1}, q2={q2}")
    if d_stat < 0:
        raise InvalidInputError(f"Distance must be nonnegative, got {d_stat}")
    return kolmogorov_tail(scaled_statistic(q1, q2, d_stat), form)
