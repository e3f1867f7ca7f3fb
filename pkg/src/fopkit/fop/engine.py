"""The first-occurrence process.

Sweep t over one or several radical families, take the square-free core M of m(t),
keep the first t producing each key (the radical M or the discriminant of Q(sqrt M))
and return the records ascending by key.
"""

import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import StrEnum
from typing import Any

from fopkit.arith.factor import squarefree_core
from fopkit.exceptions import FamilyValidationError, InvalidInputError
from fopkit.fop.families import RadicalFamily
from fopkit.fop.sieve import EXACT_LIMIT, sieve_cores, value_bound
from fopkit.infrastructure.config import settings
from fopkit.infrastructure.logging import get_logger
from fopkit.quadfield.numbers import fundamental_discriminant

logger = get_logger(__name__)


class DedupKey(StrEnum):
    RADICAL = "radical"
    DISCRIMINANT = "discriminant"


class SweepOrder(StrEnum):
    T_MAJOR = "t_major"
    FAMILY_MAJOR = "family_major"


@dataclass(slots=True)
class FopRecord:
    """First occurrence of one key: m(t_first) = M r^2 in family `family`."""

    M: int
    t: int
    r: int
    key: int
    family: int = 0
    payload: dict[str, Any] = field(default_factory=dict)

    @property
    def degenerate(self) -> bool:
        """M in {0, 1} or negative: kept, but not a real quadratic radical."""
        return self.M < 2


@dataclass(frozen=True, slots=True)
class FopStats:
    B: int
    N: int
    sweep_size: int
    nominal_size: int
    max_M: int

    @property
    def gap(self) -> int:
        return self.nominal_size - self.N


@dataclass(frozen=True, slots=True)
class GapStats:
    N: int
    gap: int
    exponent: float | None


@dataclass(slots=True)
class FopRun:
    records: list[FopRecord]
    stats: FopStats
    families: tuple[RadicalFamily, ...]

    def family_of(self, record: FopRecord) -> RadicalFamily:
        return self.families[record.family]


def dedup_key_of(M: int, key: DedupKey) -> int:
    if key is DedupKey.DISCRIMINANT and M not in (0, 1):
        return fundamental_discriminant(M)
    return M


def core_values(family: RadicalFamily, points: Sequence[int]) -> tuple[list[int], list[int]]:
    """(M, r) for every t in points, via the sieve when m is a small-valued quadratic in t."""
    if not points:
        return [], []
    coeffs = family.coefficients()
    lo, hi = min(points), max(points)
    limit = min(settings.sweep.sieve_limit, EXACT_LIMIT)
    if coeffs is not None and len(coeffs) <= 3 and lo >= 0 and value_bound(coeffs, hi) < limit:
        cores, squares = sieve_cores(coeffs, lo, hi)
        if isinstance(points, range) and points.step == 1:
            return cores.tolist(), squares.tolist()
        offsets = [t - lo for t in points]
        return cores[offsets].tolist(), squares[offsets].tolist()

    Ms, rs = [], []
    for t in points:
        m = family.radicand(t)
        if m == 0:
            Ms.append(0)
            rs.append(1)
            continue
        c = squarefree_core(m)
        Ms.append(c.M)
        rs.append(c.r)
    return Ms, rs


@dataclass(frozen=True, slots=True)
class ChunkTask:
    families: tuple[RadicalFamily, ...]
    B: int
    start: int
    stop: int
    order: SweepOrder
    span: int


def sweep_chunk(task: ChunkTask) -> list[tuple[int, int, int, int, int]]:
    """
    Sweep positions [start, stop) of every family: (sweep index, M, r, t, family) in sweep order.

    In t-major order the index is built from t itself, so families with different starting t
    or residue filters interleave by t, then by family.
    """
    count = len(task.families)
    rows: list[tuple[int, int, int, int, int]] = []
    for f, family in enumerate(task.families):
        points = family.points(task.B)[task.start : task.stop]
        Ms, rs = core_values(family, points)
        for j, (t, M, r) in enumerate(zip(points, Ms, rs, strict=True)):
            if task.order is SweepOrder.T_MAJOR:
                index = t * count + f
            else:
                index = f * task.span + task.start + j
            rows.append((index, M, r, t, f))
    rows.sort()
    logger.debug(f"Swept positions [{task.start}, {task.stop}) -> {len(rows)} values")
    return rows


def first_occurrences(task: ChunkTask, key: DedupKey) -> dict[int, tuple[int, int, int, int, int]]:
    """Key -> earliest (sweep index, M, r, t, family) inside one chunk."""
    first: dict[int, tuple[int, int, int, int, int]] = {}
    for row in sweep_chunk(task):
        k = dedup_key_of(row[1], key)
        if k not in first:
            first[k] = row
    return first


def plan_chunks(
    families: tuple[RadicalFamily, ...], B: int, order: SweepOrder, chunk_size: int
) -> list[ChunkTask]:
    span = max((len(f.points(B)) for f in families), default=0)
    return [
        ChunkTask(families, B, start, min(start + chunk_size, span), order, span)
        for start in range(0, span, chunk_size)
    ]


def _validate(families: Sequence[RadicalFamily], B: int) -> tuple[RadicalFamily, ...]:
    if B < 1:
        raise InvalidInputError(f"bound B must be >= 1, got {B}", "run_fop")
    if not families:
        raise FamilyValidationError("no families to sweep", "run_fop")
    for family in families:
        if not isinstance(family, RadicalFamily):
            raise FamilyValidationError(f"{family!r} is not a radical family", "run_fop")
    return tuple(families)


def run_fop_multi(
    families: Sequence[RadicalFamily],
    B: int,
    dedup_key: DedupKey | str = DedupKey.RADICAL,
    *,
    order: SweepOrder | str = SweepOrder.T_MAJOR,
    workers: int | None = None,
    chunk_size: int | None = None,
) -> FopRun:
    """
    First-occurrence process over the union of several families.

    Args:
        families: Families swept together
        B: Bound on the sweep parameter
        dedup_key: "radical" or "discriminant"
        order: "t_major" iterates families inside the t loop, "family_major" runs them one after the other
        workers: Worker processes (default from settings)
        chunk_size: Sweep positions per chunk (default from settings)

    Returns:
        FopRun with records ascending by key; identical for any workers/chunk_size
    """
    fams = _validate(families, B)
    key = DedupKey(dedup_key)
    order = SweepOrder(order)
    workers = workers or settings.sweep.workers
    chunk_size = chunk_size or settings.sweep.chunk_size

    tasks = plan_chunks(fams, B, order, chunk_size)
    logger.info(f"F.O.P. over {', '.join(f.name for f in fams)}: B={B}, {len(tasks)} chunks, {workers} workers")

    if workers > 1 and len(tasks) > 1:
        from fopkit.fop.parallel import map_chunks

        partials = map_chunks(tasks, key, workers)
    else:
        partials = (first_occurrences(task, key) for task in tasks)

    merged: dict[int, tuple[int, int, int, int, int]] = {}
    for partial in partials:
        for k, row in partial.items():
            held = merged.get(k)
            if held is None or row[0] < held[0]:
                merged[k] = row

    records = [FopRecord(M=row[1], t=row[3], r=row[2], key=k, family=row[4]) for k, row in sorted(merged.items())]
    sweep_size = sum(len(f.points(B)) for f in fams)
    stats = FopStats(
        B=B,
        N=len(records),
        sweep_size=sweep_size,
        nominal_size=sum(f.nominal_size(B) for f in fams),
        max_M=max((r.M for r in records), default=0),
    )
    logger.info(f"F.O.P. done: N={stats.N}, sweep={stats.sweep_size}, gap={stats.gap}")
    return FopRun(records, stats, fams)


def run_fop(family: RadicalFamily, B: int, dedup_key: DedupKey | str = DedupKey.RADICAL, **kwargs) -> FopRun:
    """First-occurrence process over a single family; see run_fop_multi."""
    return run_fop_multi([family], B, dedup_key, **kwargs)


def sweep_raw(
    families: Sequence[RadicalFamily], B: int, order: SweepOrder | str = SweepOrder.T_MAJOR
) -> list[FopRecord]:
    """The undeduplicated stream of (M, t, r) in sweep order."""
    fams = _validate(families, B)
    order = SweepOrder(order)
    rows = []
    for task in plan_chunks(fams, B, order, settings.sweep.chunk_size):
        rows.extend(sweep_chunk(task))
    # chunks cut positions, not t; the sweep index restores the order
    rows.sort()
    return [FopRecord(M=M, t=t, r=r, key=M, family=f) for _, M, r, t, f in rows]


def gap_stats(run: FopRun) -> GapStats:
    """
    N, the gap between the sweep and the number of records, and log(gap)/log(B).

    The exponent is None when the gap or B is too small for a logarithm.
    """
    gap = run.stats.gap
    B = run.stats.B
    exponent = math.log(gap) / math.log(B) if gap > 0 and B > 1 else None
    return GapStats(N=run.stats.N, gap=gap, exponent=exponent)
