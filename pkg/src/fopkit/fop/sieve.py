"""Vectorised square-free cores of a quadratic polynomial over a contiguous range of t.

Every prime p <= cbrt(max |m|) is divided out along the progressions t = root (mod p);
the cofactor left over has at most two prime factors, so it is either square-free or a
prime square.
"""

import numpy as np

from fopkit.arith.modular import sqrt_mod_p
from fopkit.arith.primes import primes_upto
from fopkit.infrastructure.logging import get_logger

logger = get_logger(__name__)

# float64 square roots of the cofactor stay exact below this
EXACT_LIMIT = 2**53


def value_bound(coeffs: tuple[int, ...], t_max: int) -> int:
    """Upper bound on |m(t)| and on every Horner partial sum for 0 <= t <= t_max."""
    return sum(abs(c) * t_max**i for i, c in enumerate(coeffs))


def roots_mod_p(coeffs: tuple[int, ...], p: int) -> list[int]:
    """Roots in [0, p) of a polynomial of degree <= 2 (constant term first)."""
    c0, c1, c2 = (list(coeffs) + [0, 0, 0])[:3]
    if len(coeffs) > 3:
        raise ValueError("roots_mod_p handles degree <= 2")
    if p < 64:
        return [t for t in range(p) if (c2 * t * t + c1 * t + c0) % p == 0]

    c0, c1, c2 = c0 % p, c1 % p, c2 % p
    if c2 == 0:
        if c1 == 0:
            return list(range(p)) if c0 == 0 else []
        return [(-c0 * pow(c1, -1, p)) % p]

    disc = (c1 * c1 - 4 * c2 * c0) % p
    root = sqrt_mod_p(disc, p)
    if root is None:
        return []
    inv = pow(2 * c2, -1, p)
    return sorted({(-c1 + root) * inv % p, (-c1 - root) * inv % p})


def sieve_cores(coeffs: tuple[int, ...], lo: int, hi: int) -> tuple[np.ndarray, np.ndarray]:
    """
    Square-free decomposition m(t) = M r^2 for every t in [lo, hi].

    Args:
        coeffs: m as a polynomial in t of degree <= 2, constant term first
        lo: First parameter (>= 0)
        hi: Last parameter

    Returns:
        (M, r) int64 arrays; m(t) = 0 gives M = 0, r = 1
    """
    if value_bound(coeffs, hi) >= EXACT_LIMIT:
        raise ValueError(f"m(t) exceeds the exact sieve range on [{lo}, {hi}]")

    t = np.arange(lo, hi + 1, dtype=np.int64)
    values = np.zeros_like(t)
    for c in reversed(coeffs):
        values = values * t + c

    sign = np.sign(values)
    zero = values == 0
    rest = np.abs(values)
    rest[zero] = 1
    core = np.ones_like(rest)
    square = np.ones_like(rest)

    max_abs = int(rest.max()) if rest.size else 1
    cube_root = int(round(max_abs ** (1 / 3))) + 2
    for p in primes_upto(cube_root):
        for root in roots_mod_p(coeffs, p):
            start = (root - lo) % p
            if start >= rest.size:
                continue
            # basic slices are views: in-place updates land in `rest`
            block = rest[start::p]
            exponent = np.zeros(block.size, dtype=np.int64)
            hit = block % p == 0
            while hit.any():
                block[hit] //= p
                exponent[hit] += 1
                hit &= block % p == 0
            core[start::p] *= np.where(exponent % 2 == 1, p, 1)
            square[start::p] *= np.power(p, exponent // 2)

    # cofactor: 1, q, q1*q2 or q^2 with q > cube_root
    s = np.rint(np.sqrt(rest.astype(np.float64))).astype(np.int64)
    is_sq = s * s == rest
    core *= np.where(is_sq, 1, rest)
    square *= np.where(is_sq, s, 1)

    core *= sign
    core[zero] = 0
    square[zero] = 1
    return core, square
