"""
App Package - Command-Line Tool
===============================

Settings, run configuration and the persist/path/compare subcommands.

Usage:
    from app import main

    exit_code = main(["persist", "--input", "cloud.csv", "--dim", "1", "--output", "d.json"])
"""

from .settings import Settings
from .run_config import RunConfig
from .commands import cmd_compare, cmd_path, cmd_persist, path_outputs, prepare_diagram, run
from .cli import build_parser, configure_logging, main

__all__ = [
    # Configuration
    'Settings', 'RunConfig',

    # Subcommands
    'cmd_persist', 'cmd_path', 'cmd_compare', 'prepare_diagram', 'path_outputs', 'run',

    # Entry point
    'build_parser', 'configure_logging', 'main',
]
