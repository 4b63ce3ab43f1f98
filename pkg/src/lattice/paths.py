"""
Dyck Words and Lattice Paths
============================

Births and deaths sorted into a single sequence form a Dyck word (births up,
deaths down). Rotating the Dyck path gives a monotone lattice path of Right and
Up steps that never rises above the diagonal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from utils.errors import InvalidInputError, TieError


class Tag(Enum):
    """Event type in a birth-death process"""
    BIRTH = "B"
    DEATH = "D"


class Step(Enum):
    """Lattice path step"""
    RIGHT = "R"
    UP = "U"


_STEP_OF_TAG = {Tag.BIRTH: Step.RIGHT, Tag.DEATH: Step.UP}


def _check_dyck(tags):
    height = 0
    for tag in tags:
        height += 1 if tag is Tag.BIRTH else -1
        if height < 0:
            raise InvalidInputError("More deaths than births in a prefix: not a Dyck word")
    if height != 0:
        raise InvalidInputError("Births and deaths must be equal in number")


@dataclass(frozen=True)
class BirthDeathProcess:
    """Merged, sorted birth and death values with their tags

    Args:
        events (tuple): (value, Tag) pairs with strictly increasing values
    """

    events: Tuple[Tuple[float, Tag], ...]

    def __post_init__(self):
        events = tuple((float(v), Tag(t)) for v, t in self.events)
        for (a, _), (b, _) in zip(events, events[1:]):
            if not a < b:
                raise TieError(f"Event values must be strictly increasing ({a} then {b})")
        _check_dyck(tag for _, tag in events)
        object.__setattr__(self, "events", events)

    @property
    def q(self):
        return len(self.events) // 2

    @property
    def tags(self):
        return tuple(tag for _, tag in self.events)

    @property
    def births(self):
        return [value for value, tag in self.events if tag is Tag.BIRTH]

    @property
    def deaths(self):
        return [value for value, tag in self.events if tag is Tag.DEATH]

    def word(self):
        return "".join(tag.value for tag in self.tags)


@dataclass(frozen=True)
class LatticePath:
    """Right/Up steps from (0, 0) to (q, q) that stay on or below the diagonal"""

    steps: Tuple[Step, ...]

    def __post_init__(self):
        steps = tuple(Step(s) for s in self.steps)
        rights = ups = 0
        for step in steps:
            if step is Step.RIGHT:
                rights += 1
            else:
                ups += 1
            if ups > rights:
                raise InvalidInputError("Lattice path rises above the diagonal")
        if rights != ups:
            raise InvalidInputError(f"Lattice path has {rights} right and {ups} up steps")
        object.__setattr__(self, "steps", steps)

    @property
    def q(self):
        return len(self.steps) // 2

    def __str__(self):
        return "".join(step.value for step in self.steps)


def to_birth_death_process(diagram):
    """Sort all birth and death values of a diagram into one tagged sequence.

    Args:
        diagram (PersistenceDiagram): Input diagram

    Returns:
        BirthDeathProcess: 2q events in increasing order

    Raises:
        TieError: If any two of the 2q values coincide
    """
    events = [(b, Tag.BIRTH) for b in diagram.births] + [(d, Tag.DEATH) for d in diagram.deaths]
    events.sort(key=lambda event: event[0])
    for (a, _), (b, _) in zip(events, events[1:]):
        if a == b:
            hint = "augment the H0 births" if diagram.dim == 0 else "rerun persist with --jitter"
            raise TieError(f"Tied filtration value {a} in the birth-death process; {hint}")
    return BirthDeathProcess(tuple(events))


def dyck_word(process):
    """Lattice path of a birth-death process: births step right, deaths step up"""
    return LatticePath(tuple(_STEP_OF_TAG[tag] for tag in process.tags))


def dyck_heights(process):
    """Height of the Dyck path after each event

    Returns:
        list: 2q nonnegative integers ending at 0
    """
    heights = []
    height = 0
    for tag in process.tags:
        height += 1 if tag is Tag.BIRTH else -1
        heights.append(height)
    return heights


def box_counts(path):
    """Unit boxes between the lattice path and the x-axis, column by column.

    The count for a column is the number of up steps taken before the right
    step that spans it, so the sequence is nondecreasing: (0, 0, 0, 0) for the
    path RRRRUUUU and (0, 1, 2, 3) for RURURURU.

    Args:
        path (LatticePath): Monotone lattice path

    Returns:
        list: q box counts
    """
    counts = []
    ups = 0
    for step in path.steps:
        if step is Step.UP:
            ups += 1
        else:
            counts.append(ups)
    return counts


def catalan(q):
    """Number of Dyck words with q births, C(2q, q) / (q + 1), as an exact integer"""
    if not isinstance(q, int) or q < 1:
        raise InvalidInputError(f"Catalan index must be a positive integer, got {q!r}")
    return math.comb(2 * q, q) // (q + 1)


def enumerate_dyck_words(q):
    """All Dyck words with q births in lexicographic order (B before D)

    Yields:
        tuple: q BIRTH and q DEATH tags
    """
    if not isinstance(q, int) or q < 1:
        raise InvalidInputError(f"Dyck word length must be a positive integer, got {q!r}")

    word = []

    def extend(births, deaths):
        if deaths == q:
            yield tuple(word)
            return
        if births < q:
            word.append(Tag.BIRTH)
            yield from extend(births + 1, deaths)
            word.pop()
        if deaths < births:
            word.append(Tag.DEATH)
            yield from extend(births, deaths + 1)
            word.pop()

    yield from extend(0, 0)
