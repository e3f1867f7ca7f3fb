import argparse
from abc import ABC, abstractmethod
from collections.abc import Sequence
from typing import ClassVar

from pydantic import BaseModel

from fopkit.exceptions import ConfigError
from fopkit.fop.engine import FopStats, SweepOrder
from fopkit.fop.families import ResidueFilter
from fopkit.infrastructure.logging import get_logger
from fopkit.schemas.records import RecordRow
from fopkit.schemas.run_config import RunConfig
from fopkit.scripts.writers import RecordTable


def _csv_list(text: str) -> tuple[str, ...]:
    return tuple(item.strip() for item in text.split(",") if item.strip())


def add_sweep_arguments(
    parser: argparse.ArgumentParser, *, raw: bool = False, order: bool = False, residue_filter: bool = False
) -> None:
    """Sweep flags shared by several subcommands."""
    if raw:
        parser.add_argument("--raw", action="store_true", help="Emit the undeduplicated sweep in t order")
    if order:
        parser.add_argument("--order", choices=[o.value for o in SweepOrder], help="Sweep order of several families")
    if residue_filter:
        parser.add_argument("--filter-modulus", type=int, help="Keep only t with t mod this in --filter-residues")
        parser.add_argument("--filter-residues", type=int, nargs="+", help="Residues kept by --filter-modulus")


class BaseScript(ABC):
    """Base class for the fopkit subcommands

    A subcommand declares its flags in add_arguments, turns a validated RunConfig into
    rows in run, and leaves writing to the runner.

    Usage:
        class NormsScript(BaseScript):
            columns = ("M", "t")

            @classmethod
            def add_arguments(cls, parser):
                parser.add_argument("--nu", type=int, required=True)

            def run(self) -> RecordTable:
                ...
    """

    columns: ClassVar[tuple[str, ...]] = ("M", "t", "r")
    row_model: ClassVar[type[BaseModel]] = RecordRow

    def __init__(self, config: RunConfig):
        self.config = config
        self.logger = get_logger(self.__class__.__name__)

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        """Subcommand-specific flags"""
        pass

    @classmethod
    def build_parser(cls, command: str) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(prog=f"fopkit {command}", description=cls.__doc__)
        parser.add_argument("--bound", type=int, required=True, help="Sweep bound B")
        parser.add_argument("--format", choices=["csv", "jsonl", "pretty"], help="Output format (default OUTPUT__FORMAT)")
        parser.add_argument("--output", help="Write rows to this file instead of stdout")
        parser.add_argument("--columns", type=_csv_list, help="Comma-separated columns for csv and pretty output")
        parser.add_argument("--workers", type=int, help="Worker processes (default SWEEP__WORKERS)")
        parser.add_argument(
            "--positive-only", action="store_true", help="Drop the degenerate records with M < 2 (they still count in N)"
        )
        parser.add_argument("--allow-long", action="store_true", help="Allow bounds above OUTPUT__LONG_BOUND")
        cls.add_arguments(parser)
        return parser

    @classmethod
    def parse_config(cls, command: str, argv: Sequence[str]) -> RunConfig:
        """
        Parse and validate the flags of one run.

        Raises:
            pydantic.ValidationError: Inconsistent option values
            ConfigError: Columns the subcommand does not produce
        """
        namespace = cls.build_parser(command).parse_args(list(argv))
        options = {name: value for name, value in vars(namespace).items() if value is not None}
        config = RunConfig.model_validate({"command": command, **options})
        if config.columns is not None:
            unknown = [c for c in config.columns if c not in cls.row_model.model_fields]
            if unknown:
                raise ConfigError(
                    f"unknown columns {unknown} for {command}, expected some of {list(cls.row_model.model_fields)}",
                    command,
                )
        return config

    def residue_filter(self) -> ResidueFilter | None:
        if self.config.filter_modulus is None or self.config.filter_residues is None:
            return None
        return ResidueFilter(self.config.filter_modulus, frozenset(self.config.filter_residues))

    def default_columns(self) -> tuple[str, ...]:
        return self.columns

    def table(
        self, rows: Sequence[BaseModel], stats: FopStats | None = None, columns: tuple[str, ...] | None = None
    ) -> RecordTable:
        """Apply --positive-only and the column choice to the produced rows."""
        if self.config.positive_only:
            rows = [row for row in rows if not getattr(row, "degenerate", False)]
        return RecordTable(rows=rows, columns=self.config.columns or columns or self.default_columns(), stats=stats)

    @abstractmethod
    def run(self) -> RecordTable:
        """Main script execution logic"""
        pass

    def setup(self):
        """Optional setup logic before script execution"""
        pass

    def teardown(self):
        """Optional cleanup logic after script execution"""
        pass

    def execute(self) -> RecordTable:
        """Execute the script with setup and teardown"""
        try:
            self.setup()
            self.logger.info(f"Starting script: {self.__class__.__name__}")
            result = self.run()
            self.logger.info(f"Script completed: {self.__class__.__name__}")
            return result
        except Exception as e:
            self.logger.error(f"Script failed: {self.__class__.__name__}", exc_info=e)
            raise
        finally:
            self.teardown()
