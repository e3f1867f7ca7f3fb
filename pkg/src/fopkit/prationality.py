"""Local p-th power units, p-adic regulators and non-p-rational real quadratic fields.

A unit built by these families is a local p-th power at p. When it is not a global p-th
power the regulator of Q(sqrt M) is divisible by p, so the field is not p-rational.
"""

import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import StrEnum
from typing import ClassVar

from fopkit.arith.factor import squarefree_core
from fopkit.arith.modular import is_pth_power_mod_q, legendre, sqrt_mod_p2, valuation
from fopkit.arith.primes import is_prime, primes_upto
from fopkit.exceptions import FamilyValidationError, InvalidInputError
from fopkit.fop.engine import DedupKey, FopRecord, FopRun, run_fop_multi
from fopkit.fop.families import PolyFamily, TraceMap
from fopkit.infrastructure.logging import get_logger
from fopkit.quadfield.numbers import QuadInt
from fopkit.quadfield.units import fundamental_unit, unit_power_decompose, unit_root

logger = get_logger(__name__)

# (a, delta, s) in the order the sixteen radicals a^2 p^4 t^2 - 2 delta a s are swept
VARIANT_A_FORMS: tuple[tuple[int, int, int], ...] = (
    (1, 2, 1),
    (1, 1, 1),
    (2, 1, 1),
    (2, 1, -1),
    (1, 1, -1),
    (1, 2, -1),
    (4, 1, 1),
    (4, 1, -1),
    (3, 1, 1),
    (3, 1, -1),
    (3, 2, 1),
    (3, 2, -1),
    (5, 1, 1),
    (5, 1, -1),
    (5, 2, 1),
    (5, 2, -1),
)


class Variant(StrEnum):
    A = "A"
    B = "B"


def _check_odd_prime(p: int, where: str) -> None:
    if p == 2:
        raise InvalidInputError("p = 2 is not supported", where)
    if not is_prime(p):
        raise InvalidInputError(f"p={p} is not an odd prime", where)


@dataclass(frozen=True, slots=True)
class Witness:
    """Prime q = 1 (mod p), a non-p-th power c mod q and t_q = (c^2 + s)/(2 c p^2) mod q."""

    q: int
    t_q: int
    c: int


@dataclass(frozen=True)
class PRationalFamily:
    """
    A radical family whose units are local p-th powers at p.

    Variant A: m(t) = a^2 p^4 t^2 - 2 delta a s, unit (a p^4 t^2 - delta s + p^2 t sqrt m)/delta of norm 1.
    Variant B: T = t0 + p^2 t, m(T) = T^2 - 4s, unit E_s(T) of norm s.
    With a witness: m(x) = p^4 (t_q + q x)^2 - s, unit p^2 (t_q + q x) + sqrt m of norm s.
    """

    p: int
    variant: Variant
    s: int
    a: int = 1
    delta: int = 1
    t0: int = 0
    witness: Witness | None = None
    name: str = ""
    poly: PolyFamily = field(init=False, repr=False, compare=False)

    kind: ClassVar[str] = "quadratic"

    def __post_init__(self):
        _check_odd_prime(self.p, "PRationalFamily")
        p2 = self.p * self.p
        if self.witness is not None:
            w = self.witness
            poly = PolyFamily(s=self.s, trace=TraceMap(c=p2 * w.q, c0=p2 * w.t_q), normalized=True)
        elif self.variant is Variant.A:
            if self.a < 1 or self.delta not in (1, 2):
                raise FamilyValidationError(f"need a >= 1 and delta in (1, 2), got a={self.a}, delta={self.delta}", "PRationalFamily")
            poly = PolyFamily(s=self.s, nu=2 * self.delta * self.a, trace=TraceMap(c=self.a * p2), normalized=True)
        else:
            if self.t0 and (self.t0 * self.t0 - 2 * self.s) % p2:
                raise FamilyValidationError(f"t0={self.t0} does not satisfy t0^2 = {2 * self.s} mod {p2}", "PRationalFamily")
            poly = PolyFamily(s=self.s, trace=TraceMap(c=p2, c0=self.t0))
        object.__setattr__(self, "poly", poly)
        if not self.name:
            object.__setattr__(self, "name", poly.name)

    def points(self, B: int) -> Sequence[int]:
        return self.poly.points(B)

    def nominal_size(self, B: int) -> int:
        return self.poly.nominal_size(B)

    def radicand(self, t: int) -> int:
        return self.poly.radicand(t)

    def coefficients(self) -> tuple[int, ...] | None:
        return self.poly.coefficients()

    def element(self, t: int, M: int, r: int) -> QuadInt | None:
        return self.poly.element(t, M, r)

    @property
    def trace_map(self) -> TraceMap:
        return self.poly.trace

    def unit(self, t: int, M: int, r: int) -> QuadInt | None:
        """The local p-th power unit at t, None for degenerate radicals."""
        A = self.element(t, M, r)
        if A is None or self.witness is not None or self.variant is Variant.B:
            return A
        # A = x + r sqrt M has norm s nu; A^2 / nu is the unit
        square = A * A
        nu = self.poly.nu
        if square.u % nu or square.v % nu:
            raise FamilyValidationError(f"{square} is not divisible by {nu}", self.name)
        return QuadInt(M, square.u // nu, square.v // nu)


def build_families(p: int, variant: Variant | str, s: int | None = None) -> list[PRationalFamily]:
    """
    The local p-th power families of one variant.

    Args:
        p: Odd prime
        variant: "A" (sixteen norm-1 radicals) or "B" (T = t0 + p^2 t)
        s: Restrict to one sign; both signs by default

    Returns:
        Families in sweep order; variant B lists t0 = 0 then the roots of t0^2 = 2s mod p^2
    """
    _check_odd_prime(p, "build_families")
    variant = Variant(variant)
    signs = (-1, 1) if s is None else (s,)
    if variant is Variant.A:
        return [PRationalFamily(p, variant, sign, a=a, delta=delta) for a, delta, sign in VARIANT_A_FORMS if sign in signs]
    return [
        PRationalFamily(p, variant, sign, t0=t0)
        for sign in signs
        for t0 in (0, *sorted(sqrt_mod_p2(2 * sign, p)))
    ]


def _mul_mod(x: tuple[int, int], y: tuple[int, int], M: int, mod: int) -> tuple[int, int]:
    return (x[0] * y[0] + M * x[1] * y[1]) % mod, (x[0] * y[1] + x[1] * y[0]) % mod


def _pow_mod(x: tuple[int, int], n: int, M: int, mod: int) -> tuple[int, int]:
    result = (1, 0)
    while n:
        if n & 1:
            result = _mul_mod(result, x, M, mod)
        x = _mul_mod(x, x, M, mod)
        n >>= 1
    return result


def _capped_valuation(n: int, p: int, cap: int) -> int:
    return cap if n == 0 else min(valuation(n, p), cap)


def w_factor(M: int, p: int) -> bool:
    """The torsion factor from roots of unity for p = 3 and M = -3 mod 9."""
    return p == 3 and M % 9 == 6


def regulator_valuation(unit: QuadInt, M: int, p: int) -> int:
    """
    v_p of the normalized p-adic regulator computed from a unit of Q(sqrt M).

    Works in (Z/p^k)[x]/(x^2 - M), doubling k until the valuation is determined.

    Args:
        unit: Unit of Q(sqrt M) other than +-1
        M: Square-free radical
        p: Odd prime

    Returns:
        Nonnegative valuation; for the fundamental unit this is v_p of the regulator
    """
    _check_odd_prime(p, "regulator_valuation")
    if unit.M != M or abs(unit.norm) != 1:
        raise InvalidInputError(f"{unit} is not a unit of Q(sqrt {M})", "regulator_valuation")
    if unit.v == 0:
        raise InvalidInputError("the regulator of +-1 is undefined", "regulator_valuation")

    ramified = M % p == 0
    if ramified:
        exponent = p - 1 if p > 3 else 6
    else:
        f = 1 if legendre(M, p) == 1 else 2
        exponent = p**f - 1

    k = 3
    while True:
        mod = p**k
        half = pow(2, -1, mod)
        a, b = _pow_mod((unit.u * half % mod, unit.v * half % mod), exponent, M, mod)
        alpha = _capped_valuation(a - 1, p, k)
        beta = _capped_valuation(b, p, k)
        if ramified:
            val = min(2 * alpha, 1 + 2 * beta)
            determined = val < 2 * (k - 1)
        else:
            val = min(alpha, beta)
            determined = val < k - 1
        if determined:
            break
        k *= 2

    if not ramified:
        return val - 1
    if p > 3:
        return (val - 1) // 2
    delta = 3 if M % 9 == 6 else 1
    return (val - 2 - delta) // 2


def local_pth_power_test(E: QuadInt, M: int, p: int) -> bool:
    """True iff E is a local p-th power at p (always for E = +-1)."""
    if E.v == 0:
        return True
    return regulator_valuation(E, M, p) >= 1


def global_pth_power_exception(E: QuadInt, M: int, p: int) -> tuple[int, bool]:
    """(n, p | n) for E = eps_M^n, through the continued-fraction unit."""
    n = unit_power_decompose(E, fundamental_unit(M))
    return n, n % p == 0


def strip_pth_powers(E: QuadInt, p: int) -> tuple[QuadInt, int]:
    """(E', k) with E = E'^(p^k) and E' not a p-th power."""
    k = 0
    while (root := unit_root(E, p)) is not None:
        E, k = root, k + 1
    return E, k


@dataclass(frozen=True, slots=True)
class RegulatorReport:
    M: int
    p: int
    regulator_valuation: int
    unit_exponent_n: int | None
    exception: bool
    w_factor: bool


def regulator_report(E: QuadInt, p: int, *, with_exponent: bool = False) -> RegulatorReport:
    """
    Regulator valuation of Q(sqrt M) and the global p-th power flag of E.

    Stripping p-th powers leaves eps^n' with p not dividing n', whose regulator
    valuation equals that of eps.
    """
    stripped, k = strip_pth_powers(E, p)
    n = global_pth_power_exception(E, E.M, p)[0] if with_exponent else None
    return RegulatorReport(
        M=E.M,
        p=p,
        regulator_valuation=regulator_valuation(stripped, E.M, p),
        unit_exponent_n=n,
        exception=k > 0,
        w_factor=w_factor(E.M, p),
    )


def certify_run(run: FopRun, p: int, *, with_exponent: bool = False) -> list[FopRecord]:
    """
    Attach vp_reg, exception and w_factor to every record of a PRationalFamily run.

    Returns:
        The records that are not certified non-p-rational (regulator valuation 0)
    """
    uncertified = []
    for record in run.records:
        family = run.family_of(record)
        if not isinstance(family, PRationalFamily):
            raise FamilyValidationError(f"{family.name} builds no local p-th power units", "certify_run")
        E = family.unit(record.t, record.M, record.r)
        if E is None:
            continue
        report = regulator_report(E, p, with_exponent=with_exponent)
        record.payload.update(vp_reg=report.regulator_valuation, exception=report.exception, w=report.w_factor)
        if report.unit_exponent_n is not None:
            record.payload["n"] = report.unit_exponent_n
        if report.regulator_valuation == 0:
            uncertified.append(record)
    logger.info(f"Certified {run.stats.N - len(uncertified)} of {run.stats.N} records at p={p}")
    return uncertified


def residue_filter(p: int, q: int, s: int) -> list[Witness]:
    """
    Residues t_q (mod q) making E_s(2 p^2 t) congruent to a non-p-th power c modulo a prime above q.

    Args:
        p: Odd prime
        q: Prime with q = 1 (mod p)
        s: Sign

    Returns:
        One witness per distinct t_q, in increasing t_q
    """
    _check_odd_prime(p, "residue_filter")
    if not is_prime(q) or q % p != 1:
        raise InvalidInputError(f"q={q} must be a prime congruent to 1 mod {p}", "residue_filter")
    seen: dict[int, Witness] = {}
    for c in range(2, q):
        if is_pth_power_mod_q(c, p, q):
            continue
        t_q = (c * c + s) * pow(2 * c * p * p, -1, q) % q
        t_q = t_q or q
        seen.setdefault(t_q, Witness(q=q, t_q=t_q, c=c))
    return [seen[t_q] for t_q in sorted(seen)]


def nonrational_families(p: int, q: int, signs: Sequence[int] = (-1, 1)) -> list[PRationalFamily]:
    return [
        PRationalFamily(p, Variant.B, s, witness=witness)
        for s in signs
        for witness in residue_filter(p, q, s)
    ]


@dataclass(slots=True)
class NonRationalRun:
    run: FopRun
    uncertified: list[FopRecord]


def nonrational_list(
    p: int,
    q: int,
    B: int,
    *,
    signs: Sequence[int] = (-1, 1),
    certify: bool = False,
    **kwargs,
) -> NonRationalRun:
    """
    F.O.P. over p^4 (t_q + q x)^2 - s, x = 1..B, for every witness residue t_q.

    Every radical found defines a non-p-rational field. With certify=True each record is
    checked: local p-th power unit, not a global p-th power, regulator divisible by p.
    """
    families = nonrational_families(p, q, signs)
    run = run_fop_multi(families, B, DedupKey.RADICAL, **kwargs)
    uncertified = []
    if certify:
        certify_run(run, p)
        for record in run.records:
            E = run.family_of(record).unit(record.t, record.M, record.r)
            if E is None:
                continue
            local = local_pth_power_test(E, record.M, p)
            record.payload["local"] = local
            if not local or record.payload["exception"]:
                uncertified.append(record)
    if uncertified:
        logger.warning(f"{len(uncertified)} records failed certification")
    return NonRationalRun(run, uncertified)


def witness_divides(family: PRationalFamily, t: int) -> bool:
    """q | N(E - c) for the unit E at x = t."""
    if family.witness is None:
        raise FamilyValidationError(f"{family.name} has no witness", "witness_divides")
    T = family.trace_map(t)
    c = family.witness.c
    value = (T - c) ** 2 - family.radicand(t)
    return value % family.witness.q == 0


def mbpow_bound(c: int, h: int, p: int, B: int) -> float:
    """Order of the largest radical whose unit may be a global p-th power: (c^2 B^(2h))^(1/p)."""
    return math.exp((2 * math.log(c) + 2 * h * math.log(B)) / p)


@dataclass(frozen=True, slots=True)
class ScanHit:
    p: int
    d: int
    M: int
    regulator_valuation: int
    w_factor: bool


def regulator_scan(prime_bound: int, shifts: Sequence[int] = (-4, -1, 1, 4)) -> list[ScanHit]:
    """
    Primes p with p | regulator of Q(sqrt M), M = core((p + 1)^2 - d).

    The unit is ((p + 1) + r sqrt M)/2 for d = +-4 and (p + 1) + r sqrt M for d = +-1.

    Returns:
        Hits with positive valuation or the p = 3 torsion factor, by p then shift
    """
    for d in shifts:
        if d not in (-4, -1, 1, 4):
            raise InvalidInputError(f"shift d must be in (-4, -1, 1, 4), got {d}", "regulator_scan")
    hits = []
    for p in primes_upto(prime_bound):
        if p == 2:
            continue
        T = p + 1
        for d in shifts:
            core = squarefree_core(T * T - d)
            M, r = core.M, core.r
            E = QuadInt(M, T, r) if abs(d) == 4 else QuadInt(M, 2 * T, 2 * r)
            stripped, _ = strip_pth_powers(E, p)
            val = regulator_valuation(stripped, M, p)
            if val > 0 or w_factor(M, p):
                hits.append(ScanHit(p=p, d=d, M=M, regulator_valuation=val, w_factor=w_factor(M, p)))
        if p % 10_000 == 1:
            logger.debug(f"regulator scan at p={p}, {len(hits)} hits")
    logger.info(f"Regulator scan up to {prime_bound}: {len(hits)} hits")
    return hits
