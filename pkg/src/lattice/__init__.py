"""
Lattice Package - Lattice Path Representations of Persistence Diagrams
======================================================================

Birth-death processes, Dyck words, weighted lattice paths, box areas and the
monotone step function phi.

Usage:
    from lattice import encode, recover_diagram

    phi = encode(diagram)
    assert recover_diagram(phi).deaths == diagram.deaths  # up to rounding
"""

from .paths import (
    BirthDeathProcess, LatticePath, Step, Tag, box_counts, catalan, dyck_heights,
    dyck_word, enumerate_dyck_words, to_birth_death_process
)
from .weighted import (
    BoxAreaSequence, WeightedLatticePath, box_areas, default_strictify_delta, strictify,
    weighted_lattice_path
)
from .step_function import (
    PathEncoding, StepFunction, encode, recover_diagram, step_function, strictified_areas
)
from .formats import (
    lattice_path_csv, parse_lattice_path_csv, parse_step_function_csv, save_lattice_path,
    save_step_function, step_function_csv
)

__all__ = [
    # Processes and paths
    'Tag', 'Step', 'BirthDeathProcess', 'LatticePath', 'to_birth_death_process', 'dyck_word',
    'dyck_heights', 'box_counts', 'catalan', 'enumerate_dyck_words',

    # Weighted paths and box areas
    'WeightedLatticePath', 'weighted_lattice_path', 'BoxAreaSequence', 'box_areas', 'strictify',
    'default_strictify_delta',

    # Step functions
    'PathEncoding', 'StepFunction', 'step_function', 'strictified_areas', 'encode',
    'recover_diagram',

    # File formats
    'lattice_path_csv', 'parse_lattice_path_csv', 'step_function_csv', 'parse_step_function_csv',
    'save_lattice_path', 'save_step_function',
]
