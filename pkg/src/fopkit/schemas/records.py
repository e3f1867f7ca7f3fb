from pydantic import BaseModel, ConfigDict

from fopkit.fop.engine import FopRecord, FopRun


class RecordRow(BaseModel):
    """One output row per F.O.P. record; optional columns depend on the subcommand."""

    M: int
    t: int
    r: int
    D: int | None = None
    family: str | None = None

    # Units and exponents
    T: int | None = None
    n: int | None = None
    S: int | None = None

    # Class groups and regulators
    h: int | None = None
    v3: int | None = None
    vp_reg: int | None = None
    w: bool | None = None
    local: bool | None = None

    exception: bool | None = None
    claim: bool | None = None
    mirror: str | None = None
    skipped: bool | None = None
    error: str | None = None

    model_config = ConfigDict(extra="forbid", frozen=True)

    @property
    def degenerate(self) -> bool:
        return self.M < 2

    @classmethod
    def from_record(cls, record: FopRecord, run: FopRun | None = None, *, discriminant: bool = False) -> "RecordRow":
        extras = {key: value for key, value in record.payload.items() if key in cls.model_fields}
        family = run.family_of(record).name if run is not None and len(run.families) > 1 else None
        D = record.key if discriminant else None
        return cls(M=record.M, t=record.t, r=record.r, D=D, family=family, **extras)


class GapRow(BaseModel):
    """Size of the F.O.P. list against the sweep for one family."""

    family: str
    B: int
    N: int
    gap: int
    exponent: float | None = None

    model_config = ConfigDict(extra="forbid", frozen=True)


class ScanRow(BaseModel):
    """A prime p whose regulator or torsion factor is divisible by p."""

    p: int
    d: int
    M: int
    vp_reg: int
    w: bool

    model_config = ConfigDict(extra="forbid", frozen=True)
