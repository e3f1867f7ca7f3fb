"""
p-rationality of the radicals built from local p-th power units, with the p-adic regulator.

Usage:
    fopkit prational --p 3 --variant A --bound 10000
    fopkit prational --p 5 --variant B --s -1 --bound 1000 --with-exponent
"""

from fopkit.exceptions import ConfigError, FopkitException
from fopkit.fop.engine import DedupKey, SweepOrder, run_fop_multi
from fopkit.prationality import Variant, build_families, certify_run, mbpow_bound
from fopkit.schemas.records import RecordRow
from fopkit.scripts.base import BaseScript, add_sweep_arguments
from fopkit.scripts.writers import RecordTable


class PRationalScript(BaseScript):
    """Regulator valuation of every radical; exceptions are units that are global p-th powers."""

    columns = ("M", "t", "vp_reg", "exception")

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--p", type=int, required=True, help="Odd prime")
        parser.add_argument("--variant", choices=[v.value for v in Variant], help="A: norm 1 radicals, B: T = t0 + p^2 t")
        parser.add_argument("--s", type=int, choices=[-1, 1], help="One sign only (both by default)")
        parser.add_argument("--with-exponent", action="store_true", help="Also report n with E = eps^n")
        add_sweep_arguments(parser, order=True)

    def run(self) -> RecordTable:
        p, B = self.config.p, self.config.bound
        try:
            families = build_families(p, self.config.variant, self.config.s)
        except FopkitException as e:
            raise ConfigError(e.message, self.config.command) from e

        order = self.config.order or SweepOrder.T_MAJOR
        run = run_fop_multi(families, B, DedupKey.RADICAL, order=order, workers=self.config.workers)
        uncertified = certify_run(run, p, with_exponent=self.config.with_exponent)

        exceptions = [record.M for record in run.records if record.payload.get("exception")]
        largest = max(family.trace_map.c for family in families)
        self.logger.info(f"p={p}: #VM = {run.stats.N}, exceptions: {exceptions}")
        self.logger.info(f"Global p-th powers expected below {mbpow_bound(largest, 1, p, B):.2f}")
        not_explained = [record.M for record in uncertified if not record.payload.get("exception")]
        if not_explained:
            self.logger.warning(f"Radicals with trivial regulator and no global p-th power: {not_explained}")
        return self.table([RecordRow.from_record(record, run) for record in run.records], run.stats)
