import numpy as np
import pytest

from geometry import PointCloud, distance_matrix
from persistence import PersistenceDiagram

UNIT_SQUARE_CSV = "0,0,0\n0,1,0\n1,1,0\n1,0,0\n"


def pdb_line(serial, name, x, y, z, chain="A", altloc=" ", residue="ALA", resnum=1,
             record="ATOM  ", element="C"):
    """One fixed-column ATOM/HETATM record"""
    return (f"{record}{serial:5d} {name:<4}{altloc}{residue:>3} {chain}{resnum:4d}    "
            f"{x:8.3f}{y:8.3f}{z:8.3f}  1.00  0.00          {element:>2}")


def cloud_from(points):
    return PointCloud(np.asarray(points, dtype=np.float64))


def dm_from(points):
    return distance_matrix(cloud_from(points))


def random_dm(rng, n, scale=10.0):
    return dm_from(rng.uniform(0, scale, size=(n, 3)))


@pytest.fixture
def unit_square_csv(tmp_path):
    path = tmp_path / "square.csv"
    path.write_text(UNIT_SQUARE_CSV)
    return path


@pytest.fixture
def nested_diagram():
    """q = 4, every birth before every death"""
    return PersistenceDiagram(dim=1, pairs=((1.0, 8.0), (2.0, 7.0), (3.0, 6.5), (4.0, 5.0)))


@pytest.fixture
def interleaved_diagram():
    return PersistenceDiagram(dim=1, pairs=((1.0, 2.0), (3.0, 4.5), (5.0, 7.0)))
