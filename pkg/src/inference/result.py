from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from inference.permutation import PermutationSummary
from utils.errors import InvalidInputError, ParseError
from utils.serialization import read_json, to_json_text, write_atomic


def _check_probability(name, value):
    if value is not None and not 0.0 <= value <= 1.0:
        raise InvalidInputError(f"{name}={value} is not a probability")


@dataclass(frozen=True)
class InferenceResult:
    """Topological distance between two diagrams and its p-values

    Args:
        q1 (int): Steps of the first function
        q2 (int): Steps of the second function
        d_stat (float): Observed D in [0, 1]
        d_scaled (float): sqrt(q1 q2 / (q1 + q2)) * D
        p_exact (float): Exact p-value, None when not requested
        p_asymptotic (float): Series p-value, None when not requested
        p_permutation (PermutationSummary): Resampled p-value, None when not requested
        provenance (dict): Inputs, sequence mode, normalization scale, settings
    """

    q1: int
    q2: int
    d_stat: float
    d_scaled: float
    p_exact: Optional[float] = None
    p_asymptotic: Optional[float] = None
    p_permutation: Optional[PermutationSummary] = None
    provenance: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if not 0.0 <= self.d_stat <= 1.0:
            raise InvalidInputError(f"d_stat={self.d_stat} is outside [0, 1]")
        _check_probability("p_exact", self.p_exact)
        _check_probability("p_asymptotic", self.p_asymptotic)
        if self.p_permutation is not None:
            _check_probability("p_permutation", self.p_permutation.p)

    def to_dict(self):
        return {
            "q1": self.q1,
            "q2": self.q2,
            "d_stat": self.d_stat,
            "d_scaled": self.d_scaled,
            "p_exact": self.p_exact,
            "p_asymptotic": self.p_asymptotic,
            "p_permutation": None if self.p_permutation is None else self.p_permutation.to_dict(),
            "provenance": self.provenance,
        }

    @classmethod
    def from_dict(cls, payload, source=""):
        try:
            perm = payload.get("p_permutation")
            return cls(
                q1=int(payload["q1"]),
                q2=int(payload["q2"]),
                d_stat=float(payload["d_stat"]),
                d_scaled=float(payload["d_scaled"]),
                p_exact=payload.get("p_exact"),
                p_asymptotic=payload.get("p_asymptotic"),
                p_permutation=None if perm is None else PermutationSummary(
                    p=float(perm["p"]), n_perm=int(perm["n_perm"]), seed=int(perm["seed"])),
                provenance=payload.get("provenance", {}),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"invalid inference result: {e}", source=source) from e

    def summary(self):
        """Human-readable multi-line summary"""
        lines = [
            f"q1 = {self.q1}, q2 = {self.q2}",
            f"topological distance D = {self.d_stat:.4f} (scaled {self.d_scaled:.4f})",
        ]
        if self.p_exact is not None:
            lines.append(f"exact p-value        = {self.p_exact:.6g}")
        if self.p_asymptotic is not None:
            lines.append(f"asymptotic p-value   = {self.p_asymptotic:.6g}")
        if self.p_permutation is not None:
            perm = self.p_permutation
            lines.append(f"permutation p-value  = {perm.p:.6g} "
                         f"({perm.n_perm} permutations, seed {perm.seed})")
        return "\n".join(lines)


def result_to_json(result):
    return to_json_text(result.to_dict())


def save_result(result, path):
    write_atomic(path, result_to_json(result))


def load_result(path):
    payload = read_json(path)
    if not isinstance(payload, dict):
        raise ParseError("inference result JSON must be an object", source=str(path))
    return InferenceResult.from_dict(payload, source=str(path))
