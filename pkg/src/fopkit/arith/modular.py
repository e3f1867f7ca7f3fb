"""Residue symbols, modular square roots and p-adic valuations."""

import gmpy2

from fopkit.arith.primes import is_prime
from fopkit.exceptions import InvalidInputError


def valuation(n: int, p: int) -> int:
    """v_p(n) for n != 0."""
    if n == 0:
        raise InvalidInputError("valuation of 0 is infinite", "valuation")
    _, count = gmpy2.remove(abs(n), p)
    return int(count)


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p."""
    return int(gmpy2.legendre(a, p))


def sqrt_mod_p(a: int, p: int) -> int | None:
    """
    One square root of a modulo an odd prime p (Tonelli-Shanks).

    Returns:
        x with x^2 = a (mod p), or None when a is a non-residue
    """
    a %= p
    if a == 0:
        return 0
    if legendre(a, p) != 1:
        return None
    if p % 4 == 3:
        return int(gmpy2.powmod(a, (p + 1) // 4, p))

    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre(z, p) != -1:
        z += 1

    m = s
    c = int(gmpy2.powmod(z, q, p))
    t = int(gmpy2.powmod(a, q, p))
    x = int(gmpy2.powmod(a, (q + 1) // 2, p))
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = int(gmpy2.powmod(c, 1 << (m - i - 1), p))
        m = i
        c = b * b % p
        t = t * c % p
        x = x * b % p
    return x


def sqrt_mod_p2(a: int, p: int) -> frozenset[int]:
    """
    All t0 in [1, p^2 - 1] with t0^2 = a (mod p^2).

    Square root modulo p, then one Hensel step. Solutions come in pairs {t0, p^2 - t0}.

    Args:
        a: Residue coprime to p
        p: Odd prime

    Returns:
        The roots, empty when a is a non-residue mod p
    """
    if p == 2 or not is_prime(p):
        raise InvalidInputError(f"p={p} must be an odd prime", "sqrt_mod_p2")
    if a % p == 0:
        raise InvalidInputError(f"p={p} divides a={a}", "sqrt_mod_p2")

    p2 = p * p
    a %= p2
    root = sqrt_mod_p(a, p)
    if root is None:
        return frozenset()

    lifted = set()
    for x in (root, p - root):
        # (x + k p)^2 = a (mod p^2)  <=>  2 x k = (a - x^2) / p (mod p)
        k = (a - x * x) // p * int(gmpy2.invert(2 * x, p)) % p
        lifted.add((x + k * p) % p2)
    return frozenset(lifted)


def is_pth_power_mod_q(c: int, p: int, q: int) -> bool:
    """
    Euler criterion for p-th powers in F_q^*.

    Args:
        c: Residue coprime to q
        p: Prime
        q: Prime with q = 1 (mod p)

    Returns:
        True iff c^((q-1)/p) = 1 (mod q)
    """
    if not is_prime(q) or q % p != 1:
        raise InvalidInputError(f"q={q} must be a prime congruent to 1 mod {p}", "is_pth_power_mod_q")
    if gmpy2.gcd(c, q) != 1:
        raise InvalidInputError(f"c={c} is not invertible mod {q}", "is_pth_power_mod_q")
    return gmpy2.powmod(c, (q - 1) // p, q) == 1
