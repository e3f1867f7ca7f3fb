"""
3-class numbers of Q(sqrt -3M) along the radicals of (t0 + 9t)^2 + 4, or of the filtered
families 81 (t_q + 7x)^2 - s whose imaginary fields always have a non-trivial 3-class group.

Usage:
    fopkit cubic --bound 10000
    fopkit cubic --bound 1000 --filtered --format pretty
"""

from fopkit.exceptions import ConfigError, InvalidInputError
from fopkit.imagclass import cubic_families, cubic_pipeline
from fopkit.schemas.records import RecordRow
from fopkit.scripts.base import BaseScript, add_sweep_arguments
from fopkit.scripts.writers import RecordTable


class CubicScript(BaseScript):
    """Class number h of Q(sqrt -3M) next to the exponent n of the local cube unit built for M."""

    columns = ("M", "v3", "n")

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--t0", type=int, nargs="+", choices=[0, 4, 5], help="Offsets t0 (default 0 4 5)")
        parser.add_argument("--both-signs-at-zero", action="store_true", help="Add (9t)^2 - 4")
        parser.add_argument("--filtered", action="store_true", help="Sweep the q = 7 residue families instead")
        parser.add_argument("--max-M", dest="max_M", type=int, help="Largest radical given a class number")
        add_sweep_arguments(parser, order=True)

    def default_columns(self) -> tuple[str, ...]:
        return ("M", "v3") if self.config.filtered else self.columns

    def run(self) -> RecordTable:
        if not self.config.filtered:
            try:
                cubic_families(self.config.t0, self.config.both_signs_at_zero)
            except InvalidInputError as e:
                raise ConfigError(e.message, self.config.command) from e

        result = cubic_pipeline(
            self.config.bound,
            self.config.t0,
            self.config.filtered,
            both_signs_at_zero=self.config.both_signs_at_zero,
            order=self.config.order,
            max_M=self.config.max_M,
            workers=self.config.workers,
        )
        self.logger.info(f"#Vh = {len(result.reports)}")
        self.logger.info(f"exceptional powers : {[[r.M, r.n] for r in result.exceptions]}")
        without_h = sum(1 for report in result.reports if report.h is None)
        if without_h:
            self.logger.info(f"{without_h} radicals above the class number limit were left without h")
        return self.table([RecordRow.from_record(record, result.run) for record in result.run.records], result.run.stats)
