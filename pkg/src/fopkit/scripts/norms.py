"""
Fundamental solutions (t + r sqrt M)/2 of norm s nu, one per radical M of t^2 - 4 s nu.

Usage:
    fopkit norms --s 1 --nu 2 --bound 1000000
    fopkit norms --s -1 --nu 1009 --bound 1000000 --positive-only
"""

from fopkit.fop.engine import DedupKey, sweep_raw
from fopkit.fop.families import norm_family
from fopkit.normeq import fop_norm_solutions
from fopkit.schemas.records import RecordRow
from fopkit.scripts.base import BaseScript, add_sweep_arguments
from fopkit.scripts.writers import RecordTable


class NormsScript(BaseScript):
    """F.O.P. over t^2 - 4 s nu; the trace t of each record is minimal for its radical."""

    columns = ("M", "t")

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--s", type=int, required=True, choices=[-1, 1], help="Sign of the norm")
        parser.add_argument("--nu", type=int, required=True, help="Positive norm factor")
        add_sweep_arguments(parser, raw=True)

    def run(self) -> RecordTable:
        s, nu = self.config.s, self.config.nu
        if self.config.raw:
            records = sweep_raw([norm_family(s, nu)], self.config.bound)
            return self.table([RecordRow.from_record(record) for record in records])

        run = fop_norm_solutions(s, nu, self.config.bound, DedupKey.RADICAL, workers=self.config.workers)
        self.logger.info(f"s.nu={s * nu}: #VM = {run.stats.N}")
        return self.table([RecordRow.from_record(record, run) for record in run.records], run.stats)
