from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Tuple

from utils.errors import InvalidInputError, ParseError
from utils.serialization import read_json, to_json_text, write_atomic


@dataclass(frozen=True)
class PersistenceDiagram:
    """Finite (birth, death) pairs of one homology dimension

    Args:
        dim (int): Homology dimension, 0 or 1
        pairs (tuple): (birth, death) pairs in angstrom, stored sorted by birth then death
        dropped_infinite (int): Essential classes discarded
        max_eps (float): Filtration ceiling used, None when the filtration was not truncated
        provenance (dict): Source file, selection policy and processing notes
    """

    dim: int
    pairs: Tuple[Tuple[float, float], ...] = ()
    dropped_infinite: int = 0
    max_eps: Optional[float] = None
    provenance: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.dim not in (0, 1):
            raise InvalidInputError(f"Homology dimension must be 0 or 1, got {self.dim}")
        pairs = tuple(sorted((float(b), float(d)) for b, d in self.pairs))
        for birth, death in pairs:
            if not (math.isfinite(birth) and math.isfinite(death)):
                raise InvalidInputError(f"Pair ({birth}, {death}) is not finite")
            if not birth < death:
                raise InvalidInputError(f"Pair ({birth}, {death}) violates birth < death")
            if self.dim == 0 and birth < 0:
                raise InvalidInputError(f"0-cycle born at negative value {birth}")
        if self.max_eps is not None and not math.isfinite(self.max_eps):
            raise InvalidInputError(f"max_eps must be finite, got {self.max_eps}")
        if self.dropped_infinite < 0:
            raise InvalidInputError("dropped_infinite must be nonnegative")
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "provenance", dict(self.provenance))

    @property
    def q(self):
        return len(self.pairs)

    @property
    def births(self):
        return [b for b, _ in self.pairs]

    @property
    def deaths(self):
        return [d for _, d in self.pairs]

    def total_persistence(self):
        """Sum of death - birth over all pairs"""
        return float(sum(d - b for b, d in self.pairs))

    def to_dict(self, include_provenance=True):
        payload = {
            "dim": self.dim,
            "max_eps": self.max_eps,
            "dropped_infinite": self.dropped_infinite,
            "pairs": [[b, d] for b, d in self.pairs],
        }
        if include_provenance and self.provenance:
            payload["provenance"] = self.provenance
        return payload

    @classmethod
    def from_dict(cls, payload, source=""):
        """Build a diagram from its JSON form

        Raises:
            ParseError: If fields are missing or pairs are invalid
        """
        try:
            pairs = [(float(b), float(d)) for b, d in payload["pairs"]]
            max_eps = payload.get("max_eps")
            return cls(
                dim=int(payload["dim"]),
                pairs=tuple(pairs),
                dropped_infinite=int(payload.get("dropped_infinite", 0)),
                max_eps=None if max_eps is None else float(max_eps),
                provenance=payload.get("provenance", {}),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"invalid persistence diagram: {e}", source=source) from e


def diagram_to_json(diagram):
    """Serialize a diagram to deterministic JSON text"""
    return to_json_text(diagram.to_dict())


def save_diagram(diagram, path):
    write_atomic(path, diagram_to_json(diagram))


def load_diagram(path):
    """Read a diagram JSON file

    Raises:
        UsageError: If the file is missing
        ParseError: If the contents are not a valid diagram
    """
    payload = read_json(path)
    if not isinstance(payload, dict):
        raise ParseError("diagram JSON must be an object", source=str(path))
    return PersistenceDiagram.from_dict(payload, source=str(path))
