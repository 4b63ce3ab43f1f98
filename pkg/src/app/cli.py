import argparse
import logging
import sys

from app.commands import run
from app.run_config import RunConfig
from app.settings import Settings
from geometry.parser_factory import CloudFormat
from inference.asymptotic import SeriesForm
from inference.compare import SequenceMode
from utils.constants import APP_NAME, APP_VERSION, DEFAULT_SETTINGS_FILE, EXIT_OK
from utils.errors import LatpathError, UsageError

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of exiting"""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser():
    """Argument parser for the latpath command"""
    parser = _Parser(prog=APP_NAME, description="Lattice paths and exact topological inference "
                                                "for Rips persistence diagrams of 3D point clouds")
    parser.add_argument("--version", action="version", version=f"{APP_NAME} {APP_VERSION}")
    parser.add_argument("--settings", default=DEFAULT_SETTINGS_FILE,
                        help="JSON settings file (default: %(default)s)")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="warnings and errors only")

    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    persist = sub.add_parser("persist", help="persistence diagram of a point cloud")
    persist.add_argument("--input", required=True, help="PDB or CSV point cloud")
    persist.add_argument("--dim", type=int, choices=(0, 1), required=True)
    persist.add_argument("--max-eps", type=float, default=None,
                         help="filtration ceiling in angstrom (default: enclosing radius for H1)")
    persist.add_argument("--select", default="all", help="all, calpha or chain:ID")
    persist.add_argument("--format", choices=[f.value for f in CloudFormat], default=None,
                         help="input format (default: from the file extension)")
    persist.add_argument("--include-hetatm", action="store_true")
    persist.add_argument("--jitter", type=float, default=None,
                         help="uniform noise magnitude breaking coordinate ties")
    persist.add_argument("--seed", type=int, default=None, help="jitter seed")
    persist.add_argument("--float32", action="store_true", help="single-precision distances")
    persist.add_argument("--output", required=True)

    path = sub.add_parser("path", help="lattice path and step function of a diagram")
    path.add_argument("--diagram", required=True)
    path.add_argument("--delta", type=float, default=None, help="strictification increment")
    path.add_argument("--output-prefix", required=True)
    path.add_argument("--svg", action="store_true", help="also write a staircase SVG")
    path.add_argument("--png", action="store_true", help="also write a staircase PNG")

    comp = sub.add_parser("compare", help="topological distance and p-values of two diagrams")
    comp.add_argument("--a", required=True)
    comp.add_argument("--b", required=True)
    comp.add_argument("--method", default=None, help="comma-separated: exact,asymptotic,permutation")
    comp.add_argument("--n-perm", type=int, default=None)
    comp.add_argument("--seed", type=int, default=None, help="permutation seed")
    comp.add_argument("--sequence", choices=[m.value for m in SequenceMode], default=None)
    comp.add_argument("--series", choices=[s.value for s in SeriesForm], default=None)
    comp.add_argument("--delta", type=float, default=None, help="strictification increment")
    comp.add_argument("--output", required=True)
    return parser


def configure_logging(level):
    """Install the single latpath stream handler on the root logger"""
    root = logging.getLogger()
    for handler in list(root.handlers):
        if getattr(handler, "latpath", False):
            root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    handler.latpath = True
    root.addHandler(handler)
    root.setLevel(level)


def main(argv=None):
    """Run latpath and return the process exit code"""
    try:
        args = build_parser().parse_args(argv)
        settings = Settings()
        settings.load_settings(args.settings)
        settings.apply_environment()
        if args.verbose:
            level = "DEBUG"
        elif args.quiet:
            level = "WARNING"
        else:
            level = settings.log_level
        configure_logging(level)
        if args.command is None:
            raise UsageError("A subcommand is required: persist, path or compare")
        run(RunConfig.from_args(args, settings))
    except LatpathError as e:
        print(f"{APP_NAME}: error: {e}", file=sys.stderr)
        return e.exit_code
    return EXIT_OK
