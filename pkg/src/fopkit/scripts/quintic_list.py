"""
Radicals of p^4 t^2 - 4s whose mirror field of degree p - 1 has class number divisible by p,
unless the unit is a p-th power (exception).

Usage:
    fopkit quintic-list --p 5 --s -1 --bound 500
    fopkit quintic-list --p 5 --s 1 --bound 500 --mirror --format jsonl
"""

import sympy

from fopkit.exceptions import ConfigError, InvalidInputError
from fopkit.imagclass import mirror_defining_polynomial, quintic_list
from fopkit.schemas.records import RecordRow
from fopkit.scripts.base import BaseScript
from fopkit.scripts.writers import RecordTable


class QuinticListScript(BaseScript):
    """F.O.P. over p^4 t^2 - 4s with the exponent n of the unit; p | n marks an exception."""

    columns = ("M", "n")

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--p", type=int, default=5, help="Odd prime (default 5)")
        parser.add_argument("--s", type=int, required=True, choices=[-1, 1], help="Norm of the units")
        parser.add_argument("--mirror", action="store_true", help="Add the defining polynomial of the mirror field")

    def default_columns(self) -> tuple[str, ...]:
        return ("M", "n", "mirror") if self.config.mirror else self.columns

    def run(self) -> RecordTable:
        p = self.config.p
        result = quintic_list(p, self.config.s, self.config.bound, workers=self.config.workers)
        self.logger.info(f"exceptions: {[[r.M, r.t, r.n] for r in result.exceptions]}")

        rows = [RecordRow.from_record(record, result.run) for record in result.run.records]
        if not self.config.mirror:
            return self.table(rows, result.run.stats)

        M = sympy.Symbol("M")
        try:
            generic = mirror_defining_polynomial(p, M).as_expr()
        except InvalidInputError as e:
            raise ConfigError(e.message, self.config.command) from e
        rows = [
            row.model_copy(update={"mirror": str(sympy.expand(generic.subs(M, row.M)))}) if not row.degenerate else row
            for row in rows
        ]
        return self.table(rows, result.run.stats)
