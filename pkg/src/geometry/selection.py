from dataclasses import dataclass
from enum import Enum
from typing import Optional

from utils.constants import CALPHA_ATOM_NAME
from utils.errors import UsageError


class AtomSelection(Enum):
    """Atom-selection policies for PDB input"""
    ALL = "all"
    CALPHA = "calpha"
    CHAIN = "chain"


@dataclass(frozen=True)
class Selection:
    """A selection policy plus its chain identifier, when it needs one"""

    kind: AtomSelection = AtomSelection.ALL
    chain: Optional[str] = None

    @classmethod
    def parse(cls, text):
        """Parse the command-line form: ``all``, ``calpha`` or ``chain:ID``

        Args:
            text (str): Selection string

        Returns:
            Selection: Parsed policy

        Raises:
            UsageError: If the string is not a known policy
        """
        text = (text or AtomSelection.ALL.value).strip()
        if text.lower().startswith(AtomSelection.CHAIN.value + ":"):
            chain = text.split(":", 1)[1]
            if len(chain) != 1:
                raise UsageError(f"Chain identifier must be one character, got '{chain}'")
            return cls(AtomSelection.CHAIN, chain)
        try:
            kind = AtomSelection(text.lower())
        except ValueError:
            raise UsageError(
                f"Unknown selection '{text}' (expected all, calpha or chain:ID)") from None
        if kind is AtomSelection.CHAIN:
            raise UsageError("Chain selection needs an identifier, e.g. chain:B")
        return cls(kind)

    def accepts(self, atom_name, chain):
        if self.kind is AtomSelection.CALPHA:
            return atom_name == CALPHA_ATOM_NAME
        if self.kind is AtomSelection.CHAIN:
            return chain == self.chain
        return True

    def describe(self):
        if self.kind is AtomSelection.CHAIN:
            return f"chain:{self.chain}"
        return self.kind.value
