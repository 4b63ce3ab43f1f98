import json
import logging
import os

from utils.constants import (
    DEFAULT_N_PERM, DEFAULT_PERMUTATION_SEED, DEFAULT_SETTINGS_FILE, DEFAULT_SIMPLEX_BUDGET,
    ENV_LOG_LEVEL, ENV_SIMPLEX_BUDGET
)
from utils.errors import ParseError, UsageError
from utils.serialization import to_json_text, write_atomic

logger = logging.getLogger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


class Settings:
    """Persistent defaults for the command-line tool.

    Values come from the built-in defaults, then the settings file, then the
    environment. Command-line flags are applied on top by ``RunConfig``.
    """

    def __init__(self):
        self.simplex_budget = DEFAULT_SIMPLEX_BUDGET
        self.log_level = "INFO"
        self.n_perm = DEFAULT_N_PERM
        self.seed = DEFAULT_PERMUTATION_SEED
        self.sequence = "h-prime"
        self.methods = "exact,asymptotic"
        self.series = "kolmogorov"

    def to_dict(self):
        return {
            "simplex_budget": self.simplex_budget,
            "log_level": self.log_level,
            "n_perm": self.n_perm,
            "seed": self.seed,
            "sequence": self.sequence,
            "methods": self.methods,
            "series": self.series,
        }

    def save_settings(self, filename=DEFAULT_SETTINGS_FILE):
        write_atomic(filename, to_json_text(self.to_dict()))

    def load_settings(self, filename=DEFAULT_SETTINGS_FILE):
        """Read settings from a JSON file, keeping defaults for absent keys

        A missing file leaves every default in place.

        Raises:
            ParseError: If the file is not a JSON object or an integer setting is not a number
        """
        try:
            with open(filename, "r", encoding="utf-8") as f:
                settings_dict = json.load(f)
        except FileNotFoundError:
            logger.debug("No settings file at %s, using defaults", filename)
            return
        except json.JSONDecodeError as e:
            raise ParseError(e.msg, line=e.lineno, source=str(filename)) from e
        if not isinstance(settings_dict, dict):
            raise ParseError("settings file must hold a JSON object", source=str(filename))

        try:
            self.simplex_budget = int(settings_dict.get("simplex_budget", self.simplex_budget))
            self.n_perm = int(settings_dict.get("n_perm", self.n_perm))
            self.seed = int(settings_dict.get("seed", self.seed))
        except (TypeError, ValueError, OverflowError) as e:
            raise ParseError(f"integer setting expected: {e}", source=str(filename)) from e
        self.log_level = str(settings_dict.get("log_level", self.log_level)).upper()
        self.sequence = settings_dict.get("sequence", self.sequence)
        self.methods = settings_dict.get("methods", self.methods)
        self.series = settings_dict.get("series", self.series)
        logger.debug("Loaded settings from %s", filename)

    def apply_environment(self, environ=None):
        """Override values from LATPATH_* environment variables

        Raises:
            UsageError: If a variable holds an unusable value
        """
        environ = os.environ if environ is None else environ
        budget = environ.get(ENV_SIMPLEX_BUDGET)
        if budget:
            try:
                self.simplex_budget = int(budget)
            except ValueError:
                raise UsageError(f"{ENV_SIMPLEX_BUDGET} must be an integer, got '{budget}'") from None
            if self.simplex_budget < 1:
                raise UsageError(f"{ENV_SIMPLEX_BUDGET} must be positive")
        level = environ.get(ENV_LOG_LEVEL)
        if level:
            level = level.upper()
            if level not in LOG_LEVELS:
                raise UsageError(f"{ENV_LOG_LEVEL} must be one of {', '.join(LOG_LEVELS)}")
            self.log_level = level
