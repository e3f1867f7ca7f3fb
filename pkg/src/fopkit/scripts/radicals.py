"""
Kummer radicals M of t^2 - 1, t^2 + 1, t^2 - 4 or t^2 + 4, first occurrences sorted by M.

Usage:
    fopkit radicals --poly t2m1 --bound 1000000
    fopkit radicals --poly t2p4 --bound 1000 --raw --format pretty
    fopkit radicals --poly t2m1 t2p1 --bound 10000 --filter-modulus 3 --filter-residues 1 2
"""

import dataclasses

from fopkit.exceptions import ConfigError, FamilyValidationError
from fopkit.fop.engine import DedupKey, SweepOrder, run_fop_multi, sweep_raw
from fopkit.fop.families import PolyFamily, radical_family
from fopkit.schemas.records import RecordRow
from fopkit.scripts.base import BaseScript, add_sweep_arguments
from fopkit.scripts.writers import RecordTable

POLY_NAMES = ("t2m1", "t2p1", "t2m4", "t2p4")


class RadicalsScript(BaseScript):
    """
    F.O.P. over one or several radical polynomials, keyed by the radical M.

    Degenerate radicals (M = 0 from t^2 - 1 at t = 1) are listed first and counted in N;
    --positive-only drops them from the rows.
    """

    columns = ("M", "r")
    raw_columns: tuple[str, ...] = ("M",)
    default_polys: tuple[str, ...] = ("t2m1",)
    key = DedupKey.RADICAL

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--poly", nargs="+", choices=POLY_NAMES, default=list(cls.default_polys))
        add_sweep_arguments(parser, raw=True, order=True, residue_filter=True)

    def families(self) -> list[PolyFamily]:
        try:
            families = [radical_family(name) for name in self.config.poly]
            residues = self.residue_filter()
        except FamilyValidationError as e:
            raise ConfigError(e.message, self.config.command) from e
        if residues is None:
            return families
        label = f"[t mod {residues.modulus} in {sorted(residues.residues)}]"
        return [dataclasses.replace(f, residue_filter=residues, name=f"{f.name} {label}") for f in families]

    def run(self) -> RecordTable:
        families = self.families()
        order = self.config.order or SweepOrder.T_MAJOR

        if self.config.raw:
            records = sweep_raw(families, self.config.bound, order)
            self.logger.info(f"Raw sweep: {len(records)} values")
            return self.table([RecordRow.from_record(record) for record in records], columns=self.raw_columns)

        run = run_fop_multi(families, self.config.bound, self.key, order=order, workers=self.config.workers)
        discriminant = self.key is DedupKey.DISCRIMINANT
        rows = [RecordRow.from_record(record, run, discriminant=discriminant) for record in run.records]
        return self.table(rows, run.stats)
