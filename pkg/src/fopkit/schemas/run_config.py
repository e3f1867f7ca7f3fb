from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from fopkit.arith.primes import is_prime
from fopkit.fop.engine import SweepOrder
from fopkit.fop.powers import TraceKind
from fopkit.infrastructure.config import settings
from fopkit.prationality import Variant

OutputFormat = Literal["csv", "jsonl", "pretty"]

# Subcommands whose sweep can be emitted undeduplicated
RAW_COMMANDS = frozenset({"radicals", "discriminants", "units", "norms"})


class RunConfig(BaseModel):
    """Validated command-line options of one subcommand run."""

    command: str
    bound: int = Field(ge=1)

    # Output
    format: OutputFormat = Field(default_factory=lambda: settings.output.format)
    output: Path | None = None
    columns: tuple[str, ...] | None = None
    positive_only: bool = False
    allow_long: bool = False

    # Sweep
    workers: int | None = Field(default=None, ge=1)
    order: SweepOrder | None = None
    raw: bool = False
    filter_modulus: int | None = None
    filter_residues: tuple[int, ...] | None = None

    # Families
    poly: tuple[str, ...] = ()
    s: int | None = None
    nu: int | None = Field(default=None, ge=1)
    trace: TraceKind = TraceKind.LINEAR
    p: int | None = None
    q: int | None = None
    variant: Variant = Variant.A
    t0: tuple[int, ...] = (0, 4, 5)
    both_signs_at_zero: bool = False
    filtered: bool = False
    mirror: bool = False
    shifts: tuple[int, ...] = (-4, -1, 1, 4)

    # McLaughlin base
    k: int | None = Field(default=None, ge=1, le=10)
    m: int | None = None
    u: int | None = None
    v: int | None = None

    certify: bool = False
    with_exponent: bool = False
    continued_fraction: bool = False
    max_M: int | None = Field(default=None, ge=1)

    model_config = ConfigDict(extra="forbid", frozen=True)

    @field_validator("s")
    @classmethod
    def validate_sign(cls, v: int | None) -> int | None:
        if v is not None and v not in (-1, 1):
            raise ValueError(f"--s must be -1 or 1, got {v}")
        return v

    @field_validator("p")
    @classmethod
    def validate_prime(cls, v: int | None) -> int | None:
        if v is not None and (v == 2 or not is_prime(v)):
            raise ValueError(f"--p must be an odd prime, got {v}")
        return v

    @model_validator(mode="after")
    def validate_consistency(self) -> "RunConfig":
        if self.bound > settings.output.long_bound and not self.allow_long:
            raise ValueError(
                f"--bound {self.bound} exceeds OUTPUT__LONG_BOUND={settings.output.long_bound}; pass --allow-long"
            )
        if self.raw and self.command not in RAW_COMMANDS:
            raise ValueError(f"--raw is only available for {', '.join(sorted(RAW_COMMANDS))}")
        if (self.filter_modulus is None) != (self.filter_residues is None):
            raise ValueError("--filter-modulus and --filter-residues go together")
        if self.filter_modulus is not None:
            if self.filter_modulus < 2:
                raise ValueError(f"--filter-modulus must be >= 2, got {self.filter_modulus}")
            outside = [c for c in self.filter_residues or () if not 0 <= c < self.filter_modulus]
            if outside:
                raise ValueError(f"residues {outside} are not reduced mod {self.filter_modulus}")
        if self.q is not None and self.p is not None and (not is_prime(self.q) or self.q % self.p != 1):
            raise ValueError(f"--q must be a prime congruent to 1 mod {self.p}, got {self.q}")
        return self
