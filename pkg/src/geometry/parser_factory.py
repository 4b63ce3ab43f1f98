from enum import Enum
from pathlib import Path

from geometry.csv_parser import parse_xyz_csv
from geometry.pdb_parser import parse_pdb
from utils.constants import CSV_EXTENSIONS, PDB_EXTENSIONS
from utils.errors import UsageError
from utils.serialization import read_text


class CloudFormat(Enum):
    """Supported point-cloud file formats"""
    PDB = "pdb"
    CSV = "csv"


class ParserFactory:
    """Factory choosing a point-cloud parser by format

    Formats are sniffed from the file extension unless given explicitly.
    """

    _extension_registry = {
        **{ext: CloudFormat.PDB.value for ext in PDB_EXTENSIONS},
        **{ext: CloudFormat.CSV.value for ext in CSV_EXTENSIONS},
    }

    @classmethod
    def sniff_format(cls, path):
        """Guess the format of a file from its extension

        Args:
            path (str or Path): Input file

        Returns:
            str: Format identifier

        Raises:
            UsageError: If the extension is not recognised
        """
        suffix = Path(path).suffix.lower()
        fmt = cls._extension_registry.get(suffix)
        if fmt is None:
            raise UsageError(
                f"Cannot infer the format of '{path}' from its extension; pass --format pdb|csv")
        return fmt

    @classmethod
    def is_valid_format(cls, fmt):
        return fmt in {member.value for member in CloudFormat}

    @classmethod
    def register_extension(cls, extension, fmt):
        """Map another file extension onto a known format"""
        if not cls.is_valid_format(fmt):
            raise UsageError(f"Unknown format '{fmt}'")
        cls._extension_registry[extension.lower()] = fmt

    @classmethod
    def parse(cls, text, fmt, selection=None, source="", include_hetatm=False):
        """Parse text in the given format

        Args:
            text (str): File contents
            fmt (str): Format identifier
            selection (Selection): Atom selection, PDB only
            source (str): Provenance string
            include_hetatm (bool): Read HETATM records too, PDB only

        Returns:
            PointCloud: Parsed cloud
        """
        if fmt == CloudFormat.PDB.value:
            return parse_pdb(text, selection, source=source, include_hetatm=include_hetatm)
        if fmt == CloudFormat.CSV.value:
            return parse_xyz_csv(text, source=source)
        raise UsageError(f"Unknown format '{fmt}'")


def load_point_cloud(path, fmt=None, selection=None, include_hetatm=False):
    """Read a point cloud from disk.

    Args:
        path (str or Path): Input file
        fmt (str): Format override, sniffed from the extension when None
        selection (Selection): Atom selection for PDB input
        include_hetatm (bool): Read HETATM records too

    Returns:
        PointCloud: Parsed cloud
    """
    fmt = fmt or ParserFactory.sniff_format(path)
    text = read_text(path)
    return ParserFactory.parse(text, fmt, selection, source=Path(path).name,
                               include_hetatm=include_hetatm)
