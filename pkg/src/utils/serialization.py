"""
Serialization Helpers
=====================

Atomic file output and deterministic JSON text shared by every writer.
"""

import json
import logging
import os
import tempfile
from pathlib import Path

from utils.constants import JSON_INDENT
from utils.errors import ParseError, UsageError

logger = logging.getLogger(__name__)


def to_json_text(payload):
    """Render a JSON document deterministically.

    Floats use Python's shortest round-trip representation, so reading the
    text back yields bit-identical values.

    Args:
        payload (dict): JSON-compatible structure

    Returns:
        str: JSON text terminated by a newline
    """
    return json.dumps(payload, indent=JSON_INDENT, sort_keys=False, allow_nan=False) + "\n"


def discard_temp(tmp_name):
    """Remove a leftover temp file, if any"""
    if os.path.exists(tmp_name):
        os.unlink(tmp_name)


def write_atomic(path, text):
    """Write text to path through a temp file and rename.

    Args:
        path (str or Path): Destination file
        text (str): Full file contents

    Raises:
        UsageError: If the destination cannot be written
    """
    path = Path(path)
    directory = path.parent if str(path.parent) else Path(".")
    try:
        directory.mkdir(parents=True, exist_ok=True)
        fd, tmp_name = tempfile.mkstemp(prefix=f".{path.name}.", suffix=".tmp", dir=directory)
    except OSError as e:
        raise UsageError(f"Cannot write {path}: {e}") from e
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        os.replace(tmp_name, path)
    except OSError as e:
        discard_temp(tmp_name)
        raise UsageError(f"Cannot write {path}: {e}") from e
    except BaseException:
        discard_temp(tmp_name)
        raise
    logger.debug("Wrote %s (%d bytes)", path, len(text))


def read_text(path):
    """Read a whole input file.

    Raises:
        UsageError: If the file does not exist or cannot be read
    """
    path = Path(path)
    if not path.is_file():
        raise UsageError(f"Input file not found: {path}")
    try:
        return path.read_text(encoding="utf-8", errors="replace")
    except OSError as e:
        raise UsageError(f"Cannot read {path}: {e}") from e


def read_json(path):
    """Read and decode a JSON document.

    Raises:
        UsageError: If the file is missing
        ParseError: If the text is not valid JSON
    """
    text = read_text(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, line=e.lineno, source=str(path)) from e
