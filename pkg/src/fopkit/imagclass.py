"""Class numbers of imaginary quadratic fields and the p-class group lists of mirror fields."""

from collections.abc import Iterable
from dataclasses import dataclass

import gmpy2
import numpy as np
import sympy

from fopkit.arith.factor import is_squarefree, squarefree_core
from fopkit.arith.modular import valuation
from fopkit.exceptions import FopkitException, InvalidInputError
from fopkit.fop.engine import DedupKey, FopRecord, FopRun, SweepOrder, run_fop_multi
from fopkit.infrastructure.config import settings
from fopkit.infrastructure.logging import get_logger
from fopkit.prationality import PRationalFamily, Variant, nonrational_families
from fopkit.quadfield.numbers import fundamental_discriminant
from fopkit.quadfield.units import perfect_power_decompose

logger = get_logger(__name__)

_x, _y = sympy.symbols("x y")


def is_fundamental_discriminant(D: int) -> bool:
    if D % 4 == 1:
        return is_squarefree(D)
    if D % 4 == 0:
        return (D // 4) % 4 in (2, 3) and is_squarefree(D // 4)
    return False


def class_number_imag(D: int) -> int:
    """
    Class number of the imaginary quadratic field of discriminant D < 0.

    Counts reduced primitive forms (a, b, c) with b^2 - 4ac = D, |b| <= a <= c,
    and b >= 0 whenever |b| = a or a = c.
    """
    if D >= 0:
        raise InvalidInputError(f"D={D} is not negative", "class_number_imag")
    if not is_fundamental_discriminant(D):
        raise InvalidInputError(f"D={D} is not a fundamental discriminant", "class_number_imag")

    h = 0
    for a in range(1, int(gmpy2.isqrt(-D // 3)) + 1):
        b = np.arange(-a + 1, a + 1, dtype=np.int64)
        b = b[(b - D) % 2 == 0]
        numerator = b * b - D
        ok = numerator % (4 * a) == 0
        c = numerator // (4 * a)
        ok &= c >= a
        ok &= ~((c == a) & (b < 0))
        ok &= np.gcd(np.gcd(b, a), c) == 1
        h += int(ok.sum())
    return h


@dataclass(frozen=True, slots=True)
class ImagClassReport:
    """Class number of Q(sqrt -3M) next to the cube test of the unit built for M."""

    M: int
    t: int
    D_neg: int
    h: int | None
    v3: int | None
    n: int
    exception: bool


def cubic_families(t0_set: Iterable[int] = (0, 4, 5), both_signs_at_zero: bool = False) -> list[PRationalFamily]:
    """m(t) = (t0 + 9t)^2 + 4, plus (9t)^2 - 4 when both signs are asked for at t0 = 0."""
    t0s = tuple(t0_set)
    if not set(t0s) <= {0, 4, 5}:
        raise InvalidInputError(f"t0 must be in {{0, 4, 5}}, got {t0s}", "cubic_pipeline")
    families = [PRationalFamily(3, Variant.B, -1, t0=t0) for t0 in t0s]
    if both_signs_at_zero and 0 in t0s:
        families.append(PRationalFamily(3, Variant.B, 1, t0=0))
    return families


def cubic_report(record: FopRecord, family: PRationalFamily, max_M: int) -> ImagClassReport:
    E = family.unit(record.t, record.M, record.r)
    if E is None:
        raise InvalidInputError(f"degenerate radical {record.M}", "cubic_pipeline")
    _, n = perfect_power_decompose(E)
    D_neg = fundamental_discriminant(squarefree_core(-3 * record.M).M)
    h = class_number_imag(D_neg) if record.M <= max_M else None
    return ImagClassReport(
        M=record.M,
        t=record.t,
        D_neg=D_neg,
        h=h,
        v3=valuation(h, 3) if h is not None else None,
        n=n,
        exception=n % 3 == 0,
    )


@dataclass(slots=True)
class CubicRun:
    run: FopRun
    reports: list[ImagClassReport]

    @property
    def exceptions(self) -> list[ImagClassReport]:
        return [report for report in self.reports if report.exception]


def cubic_pipeline(
    B: int,
    t0_set: Iterable[int] = (0, 4, 5),
    filtered: bool = False,
    *,
    both_signs_at_zero: bool = False,
    order: SweepOrder | str | None = None,
    max_M: int | None = None,
    **kwargs,
) -> CubicRun:
    """
    3-divisibility of h(Q(sqrt -3M)) along the F.O.P. lists of local cube units.

    Args:
        B: Sweep bound
        t0_set: Offsets t0 of T = t0 + 9t (unfiltered run)
        filtered: Sweep 81 (t_q + 7x)^2 - s over the residues t_q of q = 7 instead
        both_signs_at_zero: Add (9t)^2 - 4 to the unfiltered run
        order: Sweep order; family-major unfiltered and t-major filtered by default
        max_M: Largest radical given a class number (default from settings)

    Returns:
        CubicRun with one report per non-degenerate record
    """
    if filtered:
        families = nonrational_families(3, 7)
        order = order or SweepOrder.T_MAJOR
    else:
        families = cubic_families(t0_set, both_signs_at_zero)
        order = order or SweepOrder.FAMILY_MAJOR
    max_M = max_M if max_M is not None else settings.classgroup.max_M

    run = run_fop_multi(families, B, DedupKey.RADICAL, order=order, **kwargs)
    reports = []
    for record in run.records:
        if record.degenerate:
            continue
        report = cubic_report(record, run.family_of(record), max_M)
        record.payload.update(h=report.h, v3=report.v3, n=report.n, exception=report.exception)
        reports.append(report)
    logger.info(f"Cubic pipeline B={B}: {len(reports)} radicals, {sum(r.exception for r in reports)} cube exceptions")
    return CubicRun(run, reports)


def mirror_defining_polynomial(p: int, M: int | sympy.Symbol) -> sympy.Poly:
    """
    Defining polynomial of Q((zeta_p - zeta_p^-1) sqrt M), of degree p - 1.

    The product of x^2 - (theta - 2) M over the conjugates theta of 2 cos(2 pi / p) is the
    resultant in y of their minimal polynomial and x^2 - (y - 2) M.
    """
    if p == 2 or not sympy.isprime(p):
        raise InvalidInputError(f"p={p} must be an odd prime", "mirror_defining_polynomial")
    if isinstance(M, int) and (M < 2 or not is_squarefree(M)):
        raise InvalidInputError(f"M={M} is not a square-free radical >= 2", "mirror_defining_polynomial")
    theta = sympy.minimal_polynomial(2 * sympy.cos(2 * sympy.pi / p), _y)
    product = sympy.resultant(theta, _x**2 - (_y - 2) * M, _y)
    return sympy.Poly(sympy.expand(product), _x)


@dataclass(frozen=True, slots=True)
class QuinticRecord:
    """Claim: p divides the class number of the mirror field of Q(sqrt M), unless p | n."""

    M: int
    t: int
    n: int
    exception: bool

    @property
    def claim(self) -> bool:
        return not self.exception


@dataclass(slots=True)
class QuinticRun:
    run: FopRun
    records: list[QuinticRecord]

    @property
    def exceptions(self) -> list[QuinticRecord]:
        return [record for record in self.records if record.exception]


def quintic_list(p: int, s: int, B: int, **kwargs) -> QuinticRun:
    """F.O.P. over p^4 t^2 - 4s with the exponent n of E_s(p^2 t); p | n marks an exception."""
    family = PRationalFamily(p, Variant.B, s)
    run = run_fop_multi([family], B, DedupKey.RADICAL, **kwargs)
    records = []
    for record in run.records:
        E = family.unit(record.t, record.M, record.r)
        if E is None:
            continue
        try:
            _, n = perfect_power_decompose(E)
        except FopkitException as e:
            logger.warning(f"Exponent at M={record.M} failed: {e.message}")
            continue
        exception = n % p == 0
        record.payload.update(n=n, exception=exception, claim=not exception)
        records.append(QuinticRecord(M=record.M, t=record.t, n=n, exception=exception))
    logger.info(f"Quintic list p={p} s={s} B={B}: {len(records)} radicals, exceptions at {[r.M for r in records if r.exception]}")
    return QuinticRun(run, records)
