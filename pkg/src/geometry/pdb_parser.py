"""
PDB Reader
==========

Fixed-column reader for ATOM (and optionally HETATM) records. Coordinates come
from columns 31-38, 39-46 and 47-54; only the first MODEL of multi-model files
is read, and alternate locations other than ' ' and 'A' are skipped.
"""

import logging

from geometry.point_cloud import AtomLabel, PointCloud
from geometry.selection import Selection
from utils.constants import PDB_ALLOWED_ALTLOCS
from utils.errors import EmptySelectionError, ParseError

logger = logging.getLogger(__name__)


def _lines(text):
    if isinstance(text, str):
        return text.splitlines()
    return (line.rstrip("\r\n") for line in text)


def _field(line, start, stop):
    return line[start:stop] if len(line) > start else ""


def _parse_int(value, default=0):
    value = value.strip()
    try:
        return int(value)
    except ValueError:
        return default


def parse_pdb(text, selection=None, source="", include_hetatm=False):
    """Parse PDB text into a point cloud.

    Args:
        text (str or iterable of str): PDB file contents
        selection (Selection): Atom-selection policy, all atoms by default
        source (str): Provenance string, usually the file name
        include_hetatm (bool): Also read HETATM records

    Returns:
        PointCloud: One point per selected record, labels populated

    Raises:
        ParseError: If a coordinate field of a selected record is malformed
        EmptySelectionError: If no record matches the selection
    """
    selection = selection or Selection()
    records = ("ATOM  ", "HETATM") if include_hetatm else ("ATOM  ",)

    points = []
    labels = []
    skipped_altloc = 0
    seen_model = False

    for number, line in enumerate(_lines(text), start=1):
        record = line[:6].ljust(6)
        if record == "MODEL ":
            if seen_model:
                break
            seen_model = True
            continue
        if record == "ENDMDL":
            break
        if record not in records:
            continue

        altloc = _field(line, 16, 17) or " "
        if altloc not in PDB_ALLOWED_ALTLOCS:
            skipped_altloc += 1
            continue

        atom_name = _field(line, 12, 16).strip()
        chain = _field(line, 21, 22)
        if not selection.accepts(atom_name, chain):
            continue

        if len(line) < 54:
            raise ParseError("record too short for coordinates (need columns 31-54)",
                             line=number, source=source)
        try:
            xyz = (float(line[30:38]), float(line[38:46]), float(line[46:54]))
        except ValueError:
            raise ParseError(f"malformed coordinate field '{line[30:54]}'",
                             line=number, source=source) from None

        points.append(xyz)
        labels.append(AtomLabel(
            serial=_parse_int(_field(line, 6, 11)),
            name=atom_name,
            residue_name=_field(line, 17, 20).strip(),
            residue_number=_parse_int(_field(line, 22, 26)),
            chain=chain.strip(),
            element=_field(line, 76, 78).strip(),
        ))

    if not points:
        raise EmptySelectionError(
            f"No atoms selected from {source or 'PDB input'} with selection '{selection.describe()}'")

    if skipped_altloc:
        logger.debug("Skipped %d alternate-location records", skipped_altloc)
    logger.info("Read %d atoms from %s (selection %s)", len(points), source or "PDB input",
                selection.describe())

    provenance = {
        "format": "pdb",
        "selection": selection.describe(),
        "include_hetatm": include_hetatm,
        "skipped_altloc": skipped_altloc,
    }
    return PointCloud(points, tuple(labels), source=source, provenance=provenance)
