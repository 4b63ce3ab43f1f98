"""
Error Hierarchy
===============

Every failure the library reports derives from ``LatpathError``. Each class
carries the process exit code ``main()`` uses when the error reaches the top.
"""

from utils.constants import EXIT_PARSE, EXIT_RESOURCE, EXIT_USAGE


class LatpathError(Exception):
    """Base class for all latpath errors"""

    exit_code = EXIT_USAGE


class UsageError(LatpathError):
    """Bad command-line arguments, missing inputs or unknown options"""

    exit_code = EXIT_USAGE


class ParseError(LatpathError, ValueError):
    """Input text could not be parsed

    Args:
        message (str): What went wrong
        line (int): 1-based line number of the offending line, if known
        source (str): File name or other provenance string
    """

    exit_code = EXIT_PARSE

    def __init__(self, message, line=None, source=None):
        self.line = line
        self.source = source
        where = ""
        if source:
            where += f"{source}:"
        if line is not None:
            where += f"line {line}: "
        elif where:
            where += " "
        super().__init__(f"{where}{message}")


class EmptySelectionError(LatpathError, ValueError):
    """An atom selection matched nothing"""

    exit_code = EXIT_PARSE


class DuplicatePointError(LatpathError, ValueError):
    """Two points of a cloud coincide"""

    exit_code = EXIT_PARSE


class InvalidInputError(LatpathError, ValueError):
    """Argument values violate an operation's preconditions"""

    exit_code = EXIT_PARSE


class InvalidDeltaError(InvalidInputError):
    """Augmentation or strictification increment is out of range"""


class TieError(InvalidInputError):
    """Filtration values that must be distinct are tied"""


class EmptyDiagramError(InvalidInputError):
    """A diagram with no finite pairs reached an operation that needs q >= 1"""


class ResourceError(LatpathError):
    """A computation would exceed its configured budget"""

    exit_code = EXIT_RESOURCE
