"""
Exponent n of E_s(T) = (T + r sqrt M)/2 over eps_M along the F.O.P. list of T^2 - 4s.

Usage:
    fopkit verify-powers --s 1 --bound 1000000
    fopkit verify-powers --s -1 --trace prime --bound 10000 --format pretty
"""

from fopkit.fop.powers import TraceKind, verify_powers
from fopkit.schemas.records import RecordRow
from fopkit.scripts.base import BaseScript
from fopkit.scripts.writers import RecordTable


class VerifyPowersScript(BaseScript):
    """Decompose the unit of every first occurrence and list the unexpected exponents."""

    columns = ("M", "n", "t")

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--s", type=int, required=True, choices=[-1, 1], help="Norm of the swept units")
        parser.add_argument("--trace", choices=[k.value for k in TraceKind], help="T = t, t^2 or prime(t)")
        parser.add_argument("--max-M", dest="max_M", type=int, help="Only decompose units with M <= this")
        parser.add_argument(
            "--continued-fraction", action="store_true", help="Decompose against eps_M from the continued fraction"
        )

    def default_columns(self) -> tuple[str, ...]:
        if self.config.trace is TraceKind.LINEAR:
            return self.columns
        return ("M", "T", "n")

    def run(self) -> RecordTable:
        result = verify_powers(
            self.config.s,
            self.config.bound,
            self.config.trace,
            max_M=self.config.max_M,
            continued_fraction=self.config.continued_fraction,
            workers=self.config.workers,
        )
        self.logger.info(f"exceptional powers: {[[r.M, r.payload['n']] for r in result.exceptions]}")
        if result.failures:
            self.logger.warning(f"{len(result.failures)} units could not be decomposed")
        rows = [RecordRow.from_record(record, result.run) for record in result.run.records]
        return self.table(rows, result.run.stats)
