APP_NAME = "latpath"
APP_VERSION = "0.1.0"

# Exit codes
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_RESOURCE = 3

# Environment
ENV_SIMPLEX_BUDGET = "LATPATH_SIMPLEX_BUDGET"
ENV_LOG_LEVEL = "LATPATH_LOG_LEVEL"
DEFAULT_SETTINGS_FILE = "latpath_settings.json"

# Point clouds
PDB_EXTENSIONS = (".pdb", ".ent")
CSV_EXTENSIONS = (".csv", ".xyz", ".txt")
CSV_COMMENT = "#"
PDB_ALLOWED_ALTLOCS = (" ", "A")
CALPHA_ATOM_NAME = "CA"
DEFAULT_JITTER_SEED = 0

# Rips persistence
DEFAULT_SIMPLEX_BUDGET = 20_000_000  # triangles
H0_DELTA_FRACTION = 1e-3  # of the smallest H0 death

# Strictification
STRICTIFY_SCALE_FRACTION = 1e-6  # of the largest box area

# Exact inference
EXACT_INTEGER_CUTOVER = 2000  # q1 + q2 at or below this uses exact integers
BRUTEFORCE_BUDGET = 24  # q1 + q2
SERIES_TOLERANCE = 1e-16
SERIES_MAX_TERMS = 100_000
DEFAULT_N_PERM = 10_000
DEFAULT_PERMUTATION_SEED = 0
PERMUTATION_BATCH = 512  # permutations evaluated per vectorized block

# Serialization
JSON_INDENT = 2

# Rendering
PLOT_WIDTH = 480  # pixels
PLOT_HEIGHT = 480  # pixels
PLOT_MARGIN = 40  # pixels
PLOT_STROKE = "#b22222"
PLOT_AXIS = "#444444"
WHITE = (255, 255, 255)
GRAY = (100, 100, 100)
RED = (178, 34, 34)
