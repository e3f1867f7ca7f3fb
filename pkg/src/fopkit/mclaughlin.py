"""McLaughlin's polynomial units: families mcl_k(t) with U(t)^2 - mcl_k(t) V(t)^2 constant.

For k <= 5 the base is an integral unit u + v sqrt m; for k >= 6 it is a half-integral unit
(u + v sqrt m)/2 with u, v odd and U, V are halved accordingly. The unit at t is
U(t) + V(t) sqrt mcl_k(t) = U + V r sqrt M.
"""

from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import ClassVar

import gmpy2
import sympy

from fopkit.arith.factor import is_squarefree
from fopkit.exceptions import FamilyValidationError, FopkitException
from fopkit.fop.engine import DedupKey, FopRecord, FopRun, run_fop
from fopkit.infrastructure.config import settings
from fopkit.infrastructure.logging import get_logger
from fopkit.quadfield.numbers import QuadInt
from fopkit.quadfield.units import perfect_power_decompose

logger = get_logger(__name__)

_t = sympy.Symbol("t")


def _ratio(num: int, den: int, k: int) -> sympy.Rational:
    if den == 0:
        raise FamilyValidationError(f"mcl{k} divides by zero at this base", f"mcl{k}")
    return sympy.Rational(num, den)


def _formulas(k: int, m: int, u: int, v: int) -> tuple[sympy.Expr, sympy.Expr, sympy.Expr]:
    """(mcl_k, U, V) as polynomials in t."""
    t = _t
    half = sympy.Rational(1, 2)
    match k:
        case 1:
            return v**2 * t**2 + 2 * u * t + m, v**2 * t + u, sympy.Integer(v)
        case 2 | 3:
            w = u - 1 if k == 2 else u + 1
            return (
                w**2 * (v**2 * t**2 + 2 * t) + m,
                w * (v**4 * t**2 + 2 * v**2 * t) + u,
                v**3 * t + v,
            )
        case 4:
            return (
                (u + 1) ** 2 * v**2 * t**2 + 2 * (u**2 - 1) * t + m,
                _ratio((u + 1) ** 2, u - 1, k) * v**4 * t**2 + 2 * (u + 1) * v**2 * t + u,
                _ratio(u + 1, u - 1, k) * v**3 * t + v,
            )
        case 5:
            return (
                (u - 1) ** 2 * (v**6 * t**4 + 4 * v**4 * t**3 + 6 * v**2 * t**2) + 2 * (u - 1) * (2 * u - 1) * t + m,
                (u - 1) * (v**6 * t**3 + 3 * v**4 * t**2 + 3 * v**2 * t) + u,
                v**3 * t + v,
            )
        case 6:
            return v**2 * t**2 + 2 * u * t + m, half * (v**2 * t + u), half * v
        case 7 | 8:
            w = u - 2 if k == 7 else u + 2
            return (
                w**2 * (v**2 * t**2 + 2 * t) + m,
                half * (w * (v**4 * t**2 + 2 * v**2 * t) + u),
                half * (v**3 * t + v),
            )
        case 9:
            return (
                (u + 2) ** 2 * v**2 * t**2 + 2 * (u**2 - 4) * t + m,
                half * (_ratio((u + 2) ** 2, u - 2, k) * v**4 * t**2 + 2 * (u + 2) * v**2 * t + u),
                half * (_ratio(u + 2, u - 2, k) * v**3 * t + v),
            )
        case 10:
            return (
                (u - 2) ** 2 * (v**6 * t**4 + 4 * v**4 * t**3 + 6 * v**2 * t**2) + 4 * (u - 2) * (u - 1) * t + m,
                half * ((u - 2) * (v**6 * t**3 + 3 * v**4 * t**2 + 3 * v**2 * t) + u),
                half * (v**3 * t + v),
            )
    raise FamilyValidationError(f"k must be in 1..10, got {k}", "make_mcl")


def _integer_coefficients(expr: sympy.Expr, label: str, k: int) -> tuple[int, ...]:
    """Coefficients, constant term first; rejects non-integral ones."""
    coeffs = sympy.Poly(sympy.expand(expr), _t, domain="QQ").all_coeffs()
    if not all(c.is_integer for c in coeffs):
        raise FamilyValidationError(f"{label} of mcl{k} has non-integral coefficients {coeffs}", f"mcl{k}")
    return tuple(int(c) for c in reversed(coeffs))


def _horner(coeffs: Sequence[int], t: int) -> int:
    value = 0
    for c in reversed(coeffs):
        value = value * t + c
    return value


def base_norm(k: int, m: int, u: int, v: int) -> int:
    """Norm of the base unit: u^2 - m v^2, or (u^2 - m v^2)/4 for the half-integral bases."""
    raw = u * u - m * v * v
    return raw if k <= 5 else raw // 4


@dataclass(frozen=True)
class MclFamily:
    """mcl_k(t) for the base (m, u, v), with integer data for mcl_k, 2U and 2V."""

    k: int
    m: int
    u: int
    v: int
    name: str = ""
    radicand_coeffs: tuple[int, ...] = field(init=False, repr=False, compare=False)
    two_U: tuple[int, ...] = field(init=False, repr=False, compare=False)
    two_V: tuple[int, ...] = field(init=False, repr=False, compare=False)

    kind: ClassVar[str] = "mclaughlin"

    def __post_init__(self):
        self._validate_base()
        mcl, U, V = _formulas(self.k, self.m, self.u, self.v)
        if sympy.expand(U**2 - mcl * V**2 - self.norm) != 0:
            raise FamilyValidationError(
                f"U^2 - mcl{self.k} V^2 is not {self.norm} for (m, u, v) = ({self.m}, {self.u}, {self.v})", self.label
            )
        object.__setattr__(self, "radicand_coeffs", _integer_coefficients(mcl, "mcl", self.k))
        object.__setattr__(self, "two_U", _integer_coefficients(2 * U, "2U", self.k))
        object.__setattr__(self, "two_V", _integer_coefficients(2 * V, "2V", self.k))
        if not self.name:
            object.__setattr__(self, "name", f"{self.label}(m={self.m},u={self.u},v={self.v})")

    def _validate_base(self) -> None:
        k, m, u, v = self.k, self.m, self.u, self.v
        if not 1 <= k <= 10:
            raise FamilyValidationError(f"k must be in 1..10, got {k}", "make_mcl")
        if m < 2 or gmpy2.is_square(m) or not is_squarefree(m):
            raise FamilyValidationError(f"m={m} is not a square-free radical >= 2", self.label)
        if u < 1 or v < 1:
            raise FamilyValidationError(f"need u, v >= 1, got u={u}, v={v}", self.label)
        if k >= 6 and (m % 4 != 1 or u % 2 == 0 or v % 2 == 0):
            raise FamilyValidationError(f"mcl{k} needs m = 1 mod 4 and u, v odd", self.label)
        raw = u * u - m * v * v
        allowed = {1, -1} if k in (1, 6) else {1}
        if k >= 6:
            raw, rest = divmod(raw, 4)
            if rest:
                raise FamilyValidationError(f"(u + v sqrt {m})/2 is not a unit", self.label)
        if raw not in allowed:
            raise FamilyValidationError(f"base norm {raw} not in {sorted(allowed)} for mcl{k}", self.label)

    @property
    def label(self) -> str:
        return f"mcl{self.k}"

    @property
    def norm(self) -> int:
        return base_norm(self.k, self.m, self.u, self.v)

    @property
    def degree(self) -> int:
        return len(self.radicand_coeffs) - 1

    @property
    def leading_coefficient(self) -> int:
        return self.radicand_coeffs[-1]

    def points(self, B: int) -> Sequence[int]:
        return range(1, B + 1)

    def nominal_size(self, B: int) -> int:
        return max(B, 0)

    def radicand(self, t: int) -> int:
        return _horner(self.radicand_coeffs, t)

    def coefficients(self) -> tuple[int, ...] | None:
        return self.radicand_coeffs

    def U(self, t: int) -> sympy.Rational:
        return sympy.Rational(_horner(self.two_U, t), 2)

    def V(self, t: int) -> sympy.Rational:
        return sympy.Rational(_horner(self.two_V, t), 2)

    def element(self, t: int, M: int, r: int) -> QuadInt | None:
        """U + V r sqrt M, or None when M < 2 or the half coordinates leave the ring at this t."""
        if M < 2:
            return None
        u2 = _horner(self.two_U, t)
        v2 = _horner(self.two_V, t) * r
        if (u2 - v2) % 2 or (u2 % 2 and M % 4 != 1):
            return None
        return QuadInt(M, u2, v2)


def make_mcl(k: int, m: int, u: int, v: int) -> MclFamily:
    """
    McLaughlin family mcl_k over the base (m, u, v).

    Raises:
        FamilyValidationError: Wrong base norm or parity, or non-integral coefficients
    """
    return MclFamily(k, m, u, v)


@dataclass(slots=True)
class MclRun:
    run: FopRun
    exceptions: list[FopRecord]
    skipped: int
    failures: list[FopRecord]


def fop_mcl(family: MclFamily, B: int, *, certify: bool = False, record_cap: int | None = None, **kwargs) -> MclRun:
    """
    F.O.P. over mcl_k(t) with the exponent n of the unit over eps_M.

    Args:
        family: McLaughlin family
        B: Sweep bound
        certify: Decompose every record
        record_cap: Records decomposed when not certifying (default from settings)

    Returns:
        MclRun with the records where n > 1, the count of records whose unit leaves the
        ring at t_first, and the records whose decomposition failed
    """
    run = run_fop(family, B, DedupKey.RADICAL, **kwargs)
    cap = None if certify else (record_cap if record_cap is not None else settings.units.exponent_record_cap)

    exceptions, failures = [], []
    skipped = 0
    for index, record in enumerate(run.records):
        if cap is not None and index >= cap:
            break
        E = family.element(record.t, record.M, record.r)
        if E is None:
            if not record.degenerate:
                skipped += 1
                record.payload["skipped"] = True
            continue
        try:
            _, n = perfect_power_decompose(E)
        except FopkitException as e:
            logger.warning(f"{family.label} unit at t={record.t} not decomposed: {e.message}")
            record.payload["error"] = e.code
            failures.append(record)
            continue
        record.payload["n"] = n
        if n > 1:
            exceptions.append(record)

    if skipped:
        logger.info(f"{family.label}: {skipped} records with a unit outside the ring at t_first")
    return MclRun(run, exceptions, skipped, failures)
