"""
Primes p dividing the regulator of Q(sqrt M), M = core((p + 1)^2 - d), for d in -4, -1, 1, 4.

Usage:
    fopkit regulator-scan --bound 100000
    fopkit regulator-scan --bound 1000000 --shifts -1 --format pretty
"""

from fopkit.prationality import regulator_scan
from fopkit.schemas.records import ScanRow
from fopkit.scripts.base import BaseScript
from fopkit.scripts.writers import RecordTable


class RegulatorScanScript(BaseScript):
    """Scan primes 3 <= p <= bound; --bound is the prime bound here."""

    columns = ("p", "d", "M", "vp_reg", "w")
    row_model = ScanRow

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--shifts", type=int, nargs="+", choices=[-4, -1, 1, 4], help="Shifts d (default all four)")

    def run(self) -> RecordTable:
        hits = regulator_scan(self.config.bound, self.config.shifts)
        rows = [ScanRow(p=h.p, d=h.d, M=h.M, vp_reg=h.regulator_valuation, w=h.w_factor) for h in hits]
        return self.table(rows)
