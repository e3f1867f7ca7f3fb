"""
Radicals M of m_s(t) = t^2 - 4s; the unit (t + r sqrt M)/2 at the first occurrence is eps_M
(or eps_M^2 when s = 1 and eps_M has norm -1).

Usage:
    fopkit units --s -1 --bound 10000000 --allow-long
    fopkit units --s 1 --bound 1000 --columns M,t,r
"""

import dataclasses

from fopkit.exceptions import ConfigError, FamilyValidationError
from fopkit.fop.engine import DedupKey, run_fop, sweep_raw
from fopkit.fop.families import PolyFamily, units_family
from fopkit.schemas.records import RecordRow
from fopkit.scripts.base import BaseScript, add_sweep_arguments
from fopkit.scripts.writers import RecordTable


class UnitsScript(BaseScript):
    """F.O.P. over m_s(t) = t^2 - 4s for t >= 2 + s."""

    columns = ("M",)

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--s", type=int, required=True, choices=[-1, 1], help="Norm of the units")
        add_sweep_arguments(parser, raw=True, residue_filter=True)

    def family(self) -> PolyFamily:
        family = units_family(self.config.s)
        try:
            residues = self.residue_filter()
        except FamilyValidationError as e:
            raise ConfigError(e.message, self.config.command) from e
        if residues is None:
            return family
        return dataclasses.replace(family, residue_filter=residues, name=f"{family.name} [t mod {residues.modulus}]")

    def run(self) -> RecordTable:
        family = self.family()
        if self.config.raw:
            records = sweep_raw([family], self.config.bound)
            return self.table([RecordRow.from_record(record) for record in records])

        run = run_fop(family, self.config.bound, DedupKey.RADICAL, workers=self.config.workers)
        return self.table([RecordRow.from_record(record, run) for record in run.records], run.stats)
