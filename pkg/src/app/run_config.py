"""
Run Configuration
=================

One resolved set of options for a single subcommand, merged from argparse
output and ``Settings``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Tuple

from geometry.selection import Selection
from inference.asymptotic import SeriesForm
from inference.compare import DEFAULT_METHODS, SequenceMode, parse_methods
from utils.constants import DEFAULT_JITTER_SEED, DEFAULT_N_PERM, DEFAULT_PERMUTATION_SEED
from utils.errors import UsageError

SUBCOMMANDS = ("persist", "path", "compare")


@dataclass
class RunConfig:
    """Options of one latpath invocation

    Args:
        subcommand (str): persist, path or compare
        inputs (tuple): Input files in the order the subcommand reads them
        output (str): Output file (persist, compare) or prefix (path)
    """

    subcommand: str
    inputs: Tuple[str, ...] = ()
    output: str = ""
    # persist
    dim: int = 1
    max_eps: Optional[float] = None
    fmt: Optional[str] = None
    selection: Selection = field(default_factory=Selection)
    include_hetatm: bool = False
    jitter: Optional[float] = None
    jitter_seed: int = DEFAULT_JITTER_SEED
    float32: bool = False
    simplex_budget: Optional[int] = None
    # path
    delta: Optional[float] = None
    svg: bool = False
    png: bool = False
    # compare
    methods: tuple = DEFAULT_METHODS
    n_perm: int = DEFAULT_N_PERM
    seed: int = DEFAULT_PERMUTATION_SEED
    sequence: str = SequenceMode.H_PRIME.value
    series: str = SeriesForm.KOLMOGOROV.value

    def validate(self):
        """Check the run can start

        Raises:
            UsageError: On an unknown subcommand, a bad dimension, a bad count or a missing input
        """
        if self.subcommand not in SUBCOMMANDS:
            raise UsageError(f"Unknown subcommand '{self.subcommand}'")
        if self.dim not in (0, 1):
            raise UsageError(f"--dim must be 0 or 1, got {self.dim}")
        if self.max_eps is not None and not self.max_eps > 0:
            raise UsageError(f"--max-eps must be positive, got {self.max_eps}")
        if self.jitter is not None and not self.jitter > 0:
            raise UsageError(f"--jitter must be positive, got {self.jitter}")
        if self.delta is not None and not self.delta > 0:
            raise UsageError(f"--delta must be positive, got {self.delta}")
        if self.n_perm < 1:
            raise UsageError(f"--n-perm must be positive, got {self.n_perm}")
        if not self.output:
            raise UsageError(f"{self.subcommand} needs an output path")
        for name in self.inputs:
            if not Path(name).is_file():
                raise UsageError(f"Input file not found: {name}")
        return self

    @classmethod
    def from_args(cls, args, settings):
        """Merge parsed arguments over settings

        Args:
            args (argparse.Namespace): Output of the latpath parser
            settings (Settings): File and environment defaults

        Returns:
            RunConfig: Validated configuration
        """
        command = args.command
        if command == "persist":
            config = cls(
                subcommand=command,
                inputs=(args.input,),
                output=args.output,
                dim=args.dim,
                max_eps=args.max_eps,
                fmt=args.format,
                selection=Selection.parse(args.select),
                include_hetatm=args.include_hetatm,
                jitter=args.jitter,
                jitter_seed=args.seed if args.seed is not None else DEFAULT_JITTER_SEED,
                float32=args.float32,
                simplex_budget=settings.simplex_budget,
            )
        elif command == "path":
            config = cls(
                subcommand=command,
                inputs=(args.diagram,),
                output=args.output_prefix,
                delta=args.delta,
                svg=args.svg,
                png=args.png,
            )
        elif command == "compare":
            methods = args.method if args.method is not None else settings.methods
            config = cls(
                subcommand=command,
                inputs=(args.a, args.b),
                output=args.output,
                delta=args.delta,
                methods=parse_methods(methods),
                n_perm=args.n_perm if args.n_perm is not None else settings.n_perm,
                seed=args.seed if args.seed is not None else settings.seed,
                sequence=args.sequence or settings.sequence,
                series=args.series or settings.series,
            )
        else:
            raise UsageError("A subcommand is required: persist, path or compare")
        config.sequence = _enum_value(SequenceMode, config.sequence, "--sequence")
        config.series = _enum_value(SeriesForm, config.series, "--series")
        return config.validate()


def _enum_value(enum_cls, value, flag):
    try:
        return enum_cls(value).value
    except ValueError:
        valid = "|".join(member.value for member in enum_cls)
        raise UsageError(f"{flag} must be one of {valid}, got '{value}'") from None
