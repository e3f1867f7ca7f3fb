from fopkit.arith.factor import SquareFreeCore, factor, is_squarefree, squarefree_core
from fopkit.arith.modular import is_pth_power_mod_q, legendre, sqrt_mod_p, sqrt_mod_p2, valuation
from fopkit.arith.primes import first_primes, is_prime, primes_upto

__all__ = [
    "SquareFreeCore",
    "factor",
    "squarefree_core",
    "is_squarefree",
    "sqrt_mod_p",
    "sqrt_mod_p2",
    "is_pth_power_mod_q",
    "legendre",
    "valuation",
    "is_prime",
    "primes_upto",
    "first_primes",
]
