"""
Gap between the sweep and the F.O.P. list: Delta = (number of t) - N and log(Delta) / log(B).

Usage:
    fopkit gap --s -1 --bound 1000000
    fopkit gap --poly t2m1 --bound 100000 --format jsonl
"""

from fopkit.fop.engine import DedupKey, gap_stats, run_fop
from fopkit.fop.families import PolyFamily, radical_family, units_family
from fopkit.schemas.records import GapRow
from fopkit.scripts.base import BaseScript
from fopkit.scripts.radicals import POLY_NAMES
from fopkit.scripts.writers import RecordTable


class GapScript(BaseScript):
    """Gap statistics of one family: the unit family m_s(t) or a radical polynomial."""

    columns = ("family", "B", "N", "gap", "exponent")
    row_model = GapRow

    @classmethod
    def add_arguments(cls, parser):
        family = parser.add_mutually_exclusive_group(required=True)
        family.add_argument("--s", type=int, choices=[-1, 1], help="Unit family t^2 - 4s")
        family.add_argument("--poly", nargs=1, choices=POLY_NAMES, help="Radical polynomial")

    def family(self) -> PolyFamily:
        if self.config.s is not None:
            return units_family(self.config.s)
        return radical_family(self.config.poly[0])

    def run(self) -> RecordTable:
        family = self.family()
        run = run_fop(family, self.config.bound, DedupKey.RADICAL, workers=self.config.workers)
        stats = gap_stats(run)
        exponent = f"{stats.exponent:.4f}" if stats.exponent is not None else "-"
        self.logger.info(f"{family.name}: N={stats.N}, gap={stats.gap}, log(gap)/log(B)={exponent}")
        row = GapRow(family=family.name, B=self.config.bound, N=stats.N, gap=stats.gap, exponent=stats.exponent)
        return self.table([row], run.stats)
