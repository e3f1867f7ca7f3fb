"""Exponent of the swept unit E_s(T) over the fundamental unit, per first occurrence."""

from dataclasses import dataclass
from enum import StrEnum

from fopkit.exceptions import FopkitException, InvalidInputError
from fopkit.fop.engine import DedupKey, FopRecord, FopRun, run_fop
from fopkit.fop.families import PolyFamily, TraceMap, units_family
from fopkit.infrastructure.logging import get_logger
from fopkit.quadfield.units import fundamental_unit, perfect_power_decompose, unit_power_decompose

logger = get_logger(__name__)


class TraceKind(StrEnum):
    LINEAR = "linear"
    SQUARE = "square"
    PRIME = "prime"


def trace_map(kind: TraceKind | str) -> TraceMap:
    match TraceKind(kind):
        case TraceKind.LINEAR:
            return TraceMap()
        case TraceKind.SQUARE:
            return TraceMap(h=2)
        case TraceKind.PRIME:
            return TraceMap(prime=True)


def expected_exponent(s: int, S: int) -> int:
    """Smallest possible n with E_s = eps^n: 1, or 2 when E has norm 1 and eps norm -1."""
    return 2 if s == 1 and S == -1 else 1


@dataclass(slots=True)
class PowersRun:
    run: FopRun
    exceptions: list[FopRecord]
    failures: list[FopRecord]


def attach_exponent(record: FopRecord, family: PolyFamily, *, continued_fraction: bool = False) -> None:
    """Fill T, n, S and the exception flag of one record's payload."""
    E = family.element(record.t, record.M, record.r)
    if E is None:
        return
    if continued_fraction:
        eps = fundamental_unit(record.M)
        n, S = unit_power_decompose(E, eps), eps.S
    else:
        root, n = perfect_power_decompose(E)
        S = root.norm
    record.payload.update(
        T=family.trace(record.t),
        n=n,
        S=S,
        exception=n != expected_exponent(family.s, S),
    )


def verify_powers(
    s: int,
    B: int,
    trace: TraceKind | str = TraceKind.LINEAR,
    *,
    max_M: int | None = None,
    continued_fraction: bool = False,
    **kwargs,
) -> PowersRun:
    """
    F.O.P. over m_s(T) = T^2 - 4s with the exponent n of E_s(T) over eps_M per record.

    By default n comes from perfect_power_decompose(), which extracts exact roots of E_s(T)
    without knowing eps_M. With continued_fraction=True, eps_M is computed by
    fundamental_unit() and n by unit_power_decompose(); both give the same n and S.

    Args:
        s: Norm of the swept units
        B: Sweep bound
        trace: T = t, T = t^2 or T = prime(t)
        max_M: Only decompose records with M <= max_M
        continued_fraction: Decompose against the continued-fraction eps_M

    Returns:
        PowersRun with the records whose n differs from the expected exponent
    """
    if s not in (-1, 1):
        raise InvalidInputError(f"s must be -1 or 1, got {s}", "verify_powers")
    family = units_family(s, trace_map(trace))
    run = run_fop(family, B, DedupKey.RADICAL, **kwargs)

    exceptions, failures = [], []
    for record in run.records:
        if record.degenerate or (max_M is not None and record.M > max_M):
            continue
        try:
            attach_exponent(record, family, continued_fraction=continued_fraction)
        except FopkitException as e:
            logger.warning(f"Exponent of the unit at M={record.M}, t={record.t} failed: {e.message}")
            record.payload["error"] = e.code
            failures.append(record)
            continue
        if record.payload.get("exception"):
            exceptions.append(record)

    logger.info(f"verify_powers s={s} trace={TraceKind(trace)}: N={run.stats.N}, exceptions={len(exceptions)}")
    return PowersRun(run, exceptions, failures)
