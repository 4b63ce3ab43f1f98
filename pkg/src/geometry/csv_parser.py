import logging
import math

from geometry.point_cloud import PointCloud
from utils.constants import CSV_COMMENT
from utils.errors import ParseError

logger = logging.getLogger(__name__)


def parse_xyz_csv(text, source=""):
    """Parse ``x,y,z`` lines into a point cloud.

    Blank lines and lines starting with ``#`` are ignored.

    Args:
        text (str or iterable of str): CSV contents
        source (str): Provenance string

    Returns:
        PointCloud: One point per data line, in file order

    Raises:
        ParseError: On a wrong column count or a non-numeric token
    """
    lines = text.splitlines() if isinstance(text, str) else text
    points = []
    for number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith(CSV_COMMENT):
            continue
        tokens = [token.strip() for token in line.split(",")]
        if len(tokens) != 3:
            raise ParseError(f"expected 3 columns, got {len(tokens)}", line=number, source=source)
        try:
            xyz = tuple(float(token) for token in tokens)
        except ValueError:
            raise ParseError(f"non-numeric token in '{line}'", line=number, source=source) from None
        if not all(math.isfinite(value) for value in xyz):
            raise ParseError(f"non-finite coordinate in '{line}'", line=number, source=source)
        points.append(xyz)

    if not points:
        raise ParseError("no points found", source=source)

    logger.info("Read %d points from %s", len(points), source or "CSV input")
    return PointCloud(points, None, source=source, provenance={"format": "csv"})
