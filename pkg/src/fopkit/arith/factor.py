"""Integer factorization and square-free cores.

Trial division, then Miller-Rabin and Pollard rho with Brent cycle detection.
Cofactors beyond the rho range go to sympy.factorint.
"""

import random
from collections import Counter
from dataclasses import dataclass

import gmpy2
from sympy import factorint

from fopkit.arith.primes import is_prime, primes_upto
from fopkit.exceptions import InvalidInputError
from fopkit.infrastructure.config import settings
from fopkit.infrastructure.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class SquareFreeCore:
    """m = M * r^2 with M square-free, sign carried by M."""

    M: int
    r: int

    @property
    def value(self) -> int:
        return self.M * self.r * self.r


def brent_rho(n: int, rng: random.Random, max_iterations: int) -> int | None:
    """
    Pollard's rho with Brent's cycle detection and batched gcds.

    Args:
        n: Odd composite, not a perfect square
        rng: Source of the polynomial constant and start value
        max_iterations: Give up after this many steps

    Returns:
        A non-trivial factor of n, or None if none found
    """
    batch = 128
    y = rng.randrange(1, n)
    c = rng.randrange(1, n)
    g = q = power = 1
    x = ys = y
    steps = 0

    while g == 1 and steps < max_iterations:
        x = y
        for _ in range(power):
            y = (y * y + c) % n
        k = 0
        while k < power and g == 1:
            ys = y
            for _ in range(min(batch, power - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = int(gmpy2.gcd(q, n))
            k += batch
        steps += power
        power *= 2

    if g == n:
        # Batched product overshot; replay one step at a time
        while True:
            ys = (ys * ys + c) % n
            g = int(gmpy2.gcd(abs(x - ys), n))
            if g > 1:
                break
    if g in (1, n):
        return None
    return g


def _split(n: int, exponent: int, factors: Counter[int], rng: random.Random) -> None:
    if n == 1:
        return
    if is_prime(n):
        factors[n] += exponent
        return
    if gmpy2.is_square(n):
        _split(int(gmpy2.isqrt(n)), 2 * exponent, factors, rng)
        return
    if n > settings.factor.rho_limit:
        logger.debug(f"Delegating {n.bit_length()}-bit cofactor to sympy.factorint")
        for prime, e in factorint(n).items():
            factors[int(prime)] += e * exponent
        return

    divisor = None
    for _ in range(8):
        divisor = brent_rho(n, rng, settings.factor.rho_max_iterations)
        if divisor is not None:
            break
    if divisor is None:
        logger.warning(f"rho failed on {n}, falling back to sympy.factorint")
        for prime, e in factorint(n).items():
            factors[int(prime)] += e * exponent
        return
    _split(divisor, exponent, factors, rng)
    _split(n // divisor, exponent, factors, rng)


def factor(m: int) -> dict[int, int]:
    """
    Prime factorization of m.

    Args:
        m: Integer >= 2

    Returns:
        {prime: exponent}, ordered by prime
    """
    if m < 2:
        raise InvalidInputError(f"factor expects m >= 2, got {m}", "factor")

    factors: Counter[int] = Counter()
    n = m
    for p in primes_upto(settings.factor.trial_bound):
        if p * p > n:
            break
        if n % p == 0:
            n, e = gmpy2.remove(n, p)
            n = int(n)
            factors[p] += int(e)
    if n > 1:
        # seeded per input so repeated runs follow the same rho path
        rng = random.Random(settings.factor.seed ^ n)
        _split(n, 1, factors, rng)
    return dict(sorted(factors.items()))


def squarefree_core(m: int) -> SquareFreeCore:
    """
    Decompose m = M r^2 with M square-free and sign(M) = sign(m).

    Args:
        m: Nonzero integer

    Returns:
        SquareFreeCore(M, r)
    """
    if m == 0:
        raise InvalidInputError("squarefree_core is undefined at 0", "squarefree_core")

    sign = -1 if m < 0 else 1
    n = abs(m)
    if n == 1:
        return SquareFreeCore(sign, 1)

    M, r = 1, 1
    for p, e in factor(n).items():
        if e % 2:
            M *= p
        r *= p ** (e // 2)
    return SquareFreeCore(sign * M, r)


def is_squarefree(m: int) -> bool:
    return m != 0 and abs(squarefree_core(m).r) == 1
