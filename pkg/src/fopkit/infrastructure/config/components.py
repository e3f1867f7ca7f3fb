"""Reusable Pydantic config components.

These are BaseModel (NOT BaseSettings) - the parent Settings class handles
env var loading. Components just define the shape of nested config objects.
"""

from typing import Literal

from pydantic import BaseModel, Field


class SweepSettings(BaseModel):
    """First-occurrence sweep settings.

    Env vars: SWEEP__WORKERS, SWEEP__CHUNK_SIZE, SWEEP__SIEVE_LIMIT
    """

    workers: int = Field(default=1, ge=1)
    chunk_size: int = Field(default=250_000, ge=1)
    # Largest |m(t)| factored by the vectorised sieve; beyond it values go through factor()
    sieve_limit: int = 2**53


class FactorSettings(BaseModel):
    """Integer factorization settings.

    Env vars: FACTOR__TRIAL_BOUND, FACTOR__RHO_LIMIT, FACTOR__RHO_MAX_ITERATIONS, FACTOR__SEED
    """

    trial_bound: int = 10_000
    # Cofactors above this size are handed to sympy.factorint (rho + ECM)
    rho_limit: int = 10**20
    rho_max_iterations: int = 1_000_000
    seed: int = 20231


class UnitSettings(BaseModel):
    """Fundamental unit settings.

    Env vars: UNITS__CF_BUDGET, UNITS__EXPONENT_RECORD_CAP
    """

    cf_budget: int = Field(default=1_000_000, ge=1)
    # McLaughlin runs decompose the units of the first records only unless certification is asked for
    exponent_record_cap: int = Field(default=1_000, ge=0)


class ClassGroupSettings(BaseModel):
    """Imaginary class number settings.

    Env vars: CLASSGROUP__MAX_M
    """

    # Reduced-form counting is linear in |D|; larger radicals get no class number
    max_M: int = Field(default=10_000_000, ge=1)


class OracleSettings(BaseModel):
    """Brute-force oracle settings.

    Env vars: ORACLE__CHUNK
    """

    chunk: int = Field(default=65_536, ge=1)


class OutputSettings(BaseModel):
    """Record output settings.

    Env vars: OUTPUT__FORMAT, OUTPUT__LONG_BOUND
    """

    format: Literal["csv", "jsonl", "pretty"] = "csv"
    # Bounds above this need --allow-long
    long_bound: int = 5_000_000


class LoggingSettings(BaseModel):
    """Logging settings.

    Env vars: LOGGING__LEVEL
    """

    level: str = "INFO"
