"""
F.O.P. over McLaughlin's polynomial families mcl_k(t), with the exponent of each unit over eps_M.

Usage:
    fopkit mclaughlin --k 1 --m 2 --u 1 --v 1 --bound 1000
    fopkit mclaughlin --k 10 --m 301 --u 22745 --v 1311 --bound 1000 --certify
"""

from fopkit.exceptions import ConfigError, FamilyValidationError
from fopkit.mclaughlin import MclFamily, fop_mcl, make_mcl
from fopkit.schemas.records import RecordRow
from fopkit.scripts.base import BaseScript
from fopkit.scripts.writers import RecordTable


class McLaughlinScript(BaseScript):
    """Radicals of mcl_k(t) for a base unit (u + v sqrt m) or (u + v sqrt m)/2."""

    columns = ("M", "n", "t")

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--k", type=int, required=True, help="Family index 1..10")
        parser.add_argument("--m", type=int, required=True, help="Square-free radical of the base")
        parser.add_argument("--u", type=int, required=True, help="Rational coordinate of the base unit")
        parser.add_argument("--v", type=int, required=True, help="Irrational coordinate of the base unit")
        parser.add_argument("--certify", action="store_true", help="Decompose the unit of every record")

    def setup(self):
        try:
            self.family: MclFamily = make_mcl(self.config.k, self.config.m, self.config.u, self.config.v)
        except FamilyValidationError as e:
            raise ConfigError(e.message, self.config.command) from e

    def run(self) -> RecordTable:
        result = fop_mcl(self.family, self.config.bound, certify=self.config.certify, workers=self.config.workers)
        self.logger.info(f"{self.family.name}: #VM = {result.run.stats.N}")
        self.logger.info(f"exceptions: {[[r.M, r.payload['n'], r.t] for r in result.exceptions]}")
        if result.failures:
            self.logger.warning(f"{len(result.failures)} units could not be decomposed")
        return self.table([RecordRow.from_record(record, result.run) for record in result.run.records], result.run.stats)
