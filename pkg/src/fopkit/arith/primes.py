"""Primality and prime enumeration."""

from functools import lru_cache
from itertools import islice
from math import log

import gmpy2
from sympy import primerange

# Miller-Rabin with the first 13 prime bases is exact below this bound
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_EXACT_LIMIT = 3_317_044_064_679_887_385_961_981


def is_prime(n: int) -> bool:
    """
    Deterministic Miller-Rabin below 3.3e24, gmpy2's strong test above.

    Args:
        n: Integer to test

    Returns:
        True if n is prime (certainly so below the exact limit)
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n >= _MR_EXACT_LIMIT:
        return bool(gmpy2.is_prime(n, 64))

    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = gmpy2.powmod(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = gmpy2.powmod(x, 2, n)
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=16)
def primes_upto(bound: int) -> tuple[int, ...]:
    """All primes p <= bound."""
    return tuple(int(p) for p in primerange(2, bound + 1))


@lru_cache(maxsize=4)
def first_primes(count: int) -> tuple[int, ...]:
    """The first `count` primes, in increasing order."""
    if count <= 0:
        return ()
    # Rosser's bound p_n < n (ln n + ln ln n) for n >= 6
    bound = 15 if count < 6 else int(count * (log(count) + log(log(count)))) + 1
    return tuple(int(p) for p in islice(primerange(2, bound + 1), count))
