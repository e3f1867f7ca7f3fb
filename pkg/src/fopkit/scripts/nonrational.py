"""
Non-p-rational real quadratic fields from p^4 (t_q + q x)^2 - s, over the residues t_q
whose unit is congruent to a non-p-th power modulo a prime above q.

Usage:
    fopkit nonrational --p 3 --q 7 --bound 1000000
    fopkit nonrational --p 3 --q 7 --bound 1000 --certify --format jsonl
"""

from fopkit.exceptions import ConfigError, FopkitException
from fopkit.prationality import nonrational_families, nonrational_list
from fopkit.schemas.records import RecordRow
from fopkit.scripts.base import BaseScript
from fopkit.scripts.writers import RecordTable


class NonRationalScript(BaseScript):
    """Every radical listed defines a field that is not p-rational."""

    columns = ("M", "t")

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--p", type=int, default=3, help="Odd prime (default 3)")
        parser.add_argument("--q", type=int, default=7, help="Prime q = 1 mod p (default 7)")
        parser.add_argument("--s", type=int, choices=[-1, 1], help="One sign only (both by default)")
        parser.add_argument("--certify", action="store_true", help="Check the regulator of every record")

    def default_columns(self) -> tuple[str, ...]:
        if self.config.certify:
            return ("M", "t", "vp_reg", "local", "exception")
        return self.columns

    def run(self) -> RecordTable:
        signs = (-1, 1) if self.config.s is None else (self.config.s,)
        try:
            nonrational_families(self.config.p, self.config.q, signs)
        except FopkitException as e:
            raise ConfigError(e.message, self.config.command) from e

        result = nonrational_list(
            self.config.p,
            self.config.q,
            self.config.bound,
            signs=signs,
            certify=self.config.certify,
            workers=self.config.workers,
        )

        if self.config.certify:
            self.logger.info(f"exceptions : {[record.M for record in result.uncertified]}")
        return self.table([RecordRow.from_record(record, result.run) for record in result.run.records], result.run.stats)
