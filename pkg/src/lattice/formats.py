"""Lattice path and step-function CSV files"""

from lattice.paths import LatticePath, Step
from lattice.step_function import StepFunction
from utils.errors import ParseError
from utils.serialization import write_atomic


def lattice_path_csv(path):
    """``q=<n>`` header, then one R or U per line"""
    lines = [f"q={path.q}"] + [step.value for step in path.steps]
    return "\n".join(lines) + "\n"


def parse_lattice_path_csv(text, source=""):
    """Read the format written by ``lattice_path_csv``

    Raises:
        ParseError: On a missing header, unknown step or a count mismatch
    """
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines or not lines[0].startswith("q="):
        raise ParseError("missing 'q=<n>' header", line=1, source=source)
    try:
        q = int(lines[0][2:])
    except ValueError:
        raise ParseError(f"bad header '{lines[0]}'", line=1, source=source) from None
    steps = []
    for number, line in enumerate(lines[1:], start=2):
        try:
            steps.append(Step(line))
        except ValueError:
            raise ParseError(f"unknown step '{line}'", line=number, source=source) from None
    if len(steps) != 2 * q:
        raise ParseError(f"header says q={q} but found {len(steps)} steps", source=source)
    return LatticePath(tuple(steps))


def step_function_csv(step):
    """``t,phi`` header, then one row per breakpoint"""
    lines = ["t,phi"] + [f"{t!r},{j}" for t, j in step.rows()]
    return "\n".join(lines) + "\n"


def parse_step_function_csv(text, source=""):
    """Read breakpoints back from ``step_function_csv`` output

    Raises:
        ParseError: On malformed rows or values that are not consecutive steps
    """
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines or lines[0] != "t,phi":
        raise ParseError("missing 't,phi' header", line=1, source=source)
    breakpoints = []
    for number, line in enumerate(lines[1:], start=2):
        parts = line.split(",")
        try:
            t, phi = float(parts[0]), int(parts[1])
        except (IndexError, ValueError):
            raise ParseError(f"bad row '{line}'", line=number, source=source) from None
        if phi != len(breakpoints) + 1:
            raise ParseError(f"expected phi={len(breakpoints) + 1}, got {phi}", line=number,
                             source=source)
        breakpoints.append(t)
    return StepFunction(tuple(breakpoints))


def save_lattice_path(path, filename):
    write_atomic(filename, lattice_path_csv(path))


def save_step_function(step, filename):
    write_atomic(filename, step_function_csv(step))
