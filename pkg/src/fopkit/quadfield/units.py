"""Fundamental units via continued fractions, and unit-power decomposition."""

import math
from dataclasses import dataclass
from functools import lru_cache

import gmpy2

from fopkit.arith.primes import primes_upto
from fopkit.exceptions import BudgetExceededError, DecompositionError, InvalidInputError
from fopkit.infrastructure.config import settings
from fopkit.infrastructure.logging import get_logger
from fopkit.quadfield.numbers import QuadInt

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class FundUnit:
    """Fundamental unit eps_M > 1 and its norm S."""

    unit: QuadInt
    S: int

    @property
    def M(self) -> int:
        return self.unit.M


@lru_cache(maxsize=65_536)
def _fundamental_unit(M: int, budget: int) -> FundUnit:
    # PQa on (P0 + sqrt(M)) / Q0: the first return of Q to Q0 closes the period
    if M % 4 == 1:
        P0, Q0 = 1, 2
    else:
        P0, Q0 = 0, 1
    d = int(gmpy2.isqrt(M))

    P, Q = P0, Q0
    A_prev, A = 0, 1
    B_prev, B = 1, 0
    for i in range(budget):
        a = (P + d) // Q
        A_prev, A = A, a * A + A_prev
        B_prev, B = B, a * B + B_prev
        P = a * Q - P
        Q = (M - P * P) // Q
        if Q == Q0:
            S = -1 if i % 2 == 0 else 1
            if Q0 == 1:
                unit = QuadInt(M, 2 * A, 2 * B)
            else:
                unit = QuadInt(M, 2 * A - B, B)
            return FundUnit(unit, S)
    raise BudgetExceededError(f"period of sqrt({M}) exceeds {budget} steps", "fundamental_unit")


def fundamental_unit(M: int, budget: int | None = None) -> FundUnit:
    """
    Fundamental unit of Q(sqrt M) by the continued fraction of (P0 + sqrt M)/Q0.

    Args:
        M: Square-free integer >= 2
        budget: Maximum partial quotients before giving up

    Returns:
        FundUnit with u, v >= 1

    Raises:
        BudgetExceededError: The period is longer than the budget
    """
    if M < 2 or gmpy2.is_square(M):
        raise InvalidInputError(f"M={M} is not a real quadratic radical", "fundamental_unit")
    return _fundamental_unit(M, budget or settings.units.cf_budget)


def fundamental_unit_bruteforce(M: int, v_limit: int = 10**6) -> FundUnit | None:
    """Smallest v >= 1 with M v^2 -/+ 4 a square; None past v_limit."""
    for v in range(1, v_limit + 1):
        for S, shift in ((-1, -4), (1, 4)):
            w = M * v * v + shift
            if w > 0 and gmpy2.is_square(w):
                return FundUnit(QuadInt(M, int(gmpy2.isqrt(w)), v), S)
    return None


def unit_power_decompose(E: QuadInt, eps: FundUnit) -> int:
    """
    Exponent n >= 1 with E = eps^n.

    The candidate comes from log E / log eps and is confirmed by exact powering.

    Args:
        E: Unit > 1 of the field of eps
        eps: Fundamental unit

    Returns:
        n

    Raises:
        DecompositionError: E is not a positive power of eps
    """
    if E.M != eps.M:
        raise InvalidInputError(f"unit of Q(sqrt {E.M}) against eps of Q(sqrt {eps.M})", "unit_power_decompose")
    if abs(E.norm) != 1:
        raise InvalidInputError(f"{E} has norm {E.norm}, not a unit", "unit_power_decompose")
    if E == eps.unit:
        return 1
    if E.u <= 0 or E.v <= 0:
        raise DecompositionError(f"{E} is not a unit > 1 with positive coordinates", "unit_power_decompose")

    estimate = max(1, round(E.log_value() / eps.unit.log_value()))
    for n in (estimate, estimate - 1, estimate + 1):
        if n >= 1 and eps.unit**n == E:
            return n
    raise DecompositionError(f"{E} is not a power of {eps.unit} near n={estimate}", "unit_power_decompose")


def unit_first_trace(M: int, s: int) -> int | None:
    """
    Smallest t >= 2 + s with core(t^2 - 4s) = M.

    That t is the trace of the smallest unit of norm s: eps_M itself, or eps_M^2
    when s = 1 and eps_M has norm -1. None when Q(sqrt M) has no unit of norm s.
    """
    eps = fundamental_unit(M)
    if eps.S == s:
        return eps.unit.trace
    if s == 1:
        return (eps.unit * eps.unit).trace
    return None


def unit_root(E: QuadInt, ell: int) -> QuadInt | None:
    """
    The unit rho > 1 with rho^ell = E, or None when E is not an ell-th power.

    The real root of E is taken in multiprecision; its trace rho + N(rho)/rho is then an
    integer candidate, confirmed by exact powering.

    Args:
        E: Unit > 1 with positive coordinates
        ell: Prime exponent

    Returns:
        rho, or None
    """
    if abs(E.norm) != 1 or E.u <= 0 or E.v <= 0:
        raise InvalidInputError(f"{E} is not a unit > 1 with positive coordinates", "unit_root")
    if ell == 2 and E.norm != 1:
        return None
    norms = (E.norm,) if ell % 2 else (1, -1)

    precision = E.u.bit_length() + E.v.bit_length() + 64
    with gmpy2.context(precision=precision):
        real = (gmpy2.mpz(E.u) + gmpy2.mpz(E.v) * gmpy2.sqrt(E.M)) / 2
        eta = gmpy2.root(real, ell)
        candidates = [int(gmpy2.rint(eta + N / eta)) for N in norms]

    for N, tau in zip(norms, candidates, strict=True):
        w2, rest = divmod(tau * tau - 4 * N, E.M)
        if rest or w2 <= 0 or not gmpy2.is_square(w2):
            continue
        w = int(gmpy2.isqrt(w2))
        if (tau - w) % 2 or (tau % 2 and E.M % 4 != 1):
            continue
        rho = QuadInt(E.M, tau, w)
        if rho**ell == E:
            return rho
    return None


def perfect_power_decompose(E: QuadInt) -> tuple[QuadInt, int]:
    """
    Write a unit E > 1 as eps^n with eps the fundamental unit, without continued fractions.

    Every unit > 1 exceeds (1 + sqrt M)/2, which bounds n; prime roots are extracted
    until none is left, and the unit that remains is eps_M.

    Returns:
        (eps_M, n)
    """
    floor = math.log((1 + math.sqrt(E.M)) / 2)
    base, n = E, 1
    smallest = 2
    while True:
        limit = math.floor(base.log_value() / floor + 1e-9)
        for ell in primes_upto(max(limit, 2)):
            if ell < smallest or ell > limit:
                continue
            root = unit_root(base, ell)
            if root is not None:
                # primes below ell already failed on a multiple of the remaining exponent
                base, n, smallest = root, n * ell, ell
                break
        else:
            return base, n
