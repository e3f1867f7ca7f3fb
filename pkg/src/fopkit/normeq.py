"""Fundamental solutions of u^2 - M v^2 = 4 s nu."""

from dataclasses import dataclass

import gmpy2
import numpy as np

from fopkit.exceptions import InvalidInputError
from fopkit.fop.engine import DedupKey, FopRun, run_fop
from fopkit.fop.families import norm_family
from fopkit.infrastructure.config import settings
from fopkit.infrastructure.logging import get_logger
from fopkit.quadfield.numbers import QuadInt
from fopkit.quadfield.units import fundamental_unit

logger = get_logger(__name__)

# u^2 stays inside int64 below this
_NUMPY_TRACE_LIMIT = 3_000_000_000


@dataclass(frozen=True, slots=True)
class NormEqSolution:
    """alpha = (u + v sqrt M)/2 with u, v >= 1 and norm s nu."""

    alpha: QuadInt
    s: int
    nu: int

    def __post_init__(self):
        if self.alpha.u < 1 or self.alpha.v < 1:
            raise InvalidInputError(f"{self.alpha} is a trivial solution", "NormEqSolution")
        if self.alpha.norm != self.s * self.nu:
            raise InvalidInputError(f"{self.alpha} has norm {self.alpha.norm}, expected {self.s * self.nu}", "NormEqSolution")

    @property
    def M(self) -> int:
        return self.alpha.M


def fop_norm_solutions(s: int, nu: int, B: int, dedup_key: DedupKey | str = DedupKey.RADICAL, **kwargs) -> FopRun:
    """
    F.O.P. over m(t) = t^2 - 4 s nu; each record with M >= 2 carries alpha = (t + r sqrt M)/2.

    The first t reaching M is the minimal trace, so alpha is the fundamental solution for M.
    """
    if s not in (-1, 1) or nu < 1:
        raise InvalidInputError(f"need s in (-1, 1) and nu >= 1, got s={s}, nu={nu}", "fop_norm_solutions")
    family = norm_family(s, nu)
    run = run_fop(family, B, dedup_key, **kwargs)
    for record in run.records:
        alpha = family.element(record.t, record.M, record.r)
        if alpha is not None:
            record.payload["alpha"] = NormEqSolution(alpha, s, nu)
    return run


def default_trace_bound(M: int, nu: int) -> int:
    return 4 * nu * int(gmpy2.isqrt(M - 1) + 1) + fundamental_unit(M).unit.trace


def _solution_at(M: int, s: int, nu: int, u: int) -> NormEqSolution | None:
    w, rest = divmod(u * u - 4 * s * nu, M)
    if rest or w <= 0 or not gmpy2.is_square(w):
        return None
    v = int(gmpy2.isqrt(w))
    if (u - v) % 2:
        return None
    return NormEqSolution(QuadInt(M, u, v), s, nu)


def min_trace_oracle(M: int, s: int, nu: int, trace_bound: int | None = None) -> NormEqSolution | None:
    """
    Scan u = 1, 2, ... for the first (u^2 - 4 s nu)/M that is a square v^2 of the parity of u.

    Args:
        M: Square-free radical >= 2
        s: Sign of the norm
        nu: Positive norm factor
        trace_bound: Largest trace scanned (default 4 nu ceil(sqrt M) + trace(eps_M))

    Returns:
        The minimal-trace solution, or None when there is none up to the bound
    """
    if M < 2 or gmpy2.is_square(M):
        raise InvalidInputError(f"M={M} is not a real quadratic radical", "min_trace_oracle")
    bound = trace_bound if trace_bound is not None else default_trace_bound(M, nu)
    chunk = settings.oracle.chunk
    shift = 4 * s * nu

    start = 1
    fast_stop = min(bound, _NUMPY_TRACE_LIMIT)
    while start <= fast_stop:
        stop = min(start + chunk - 1, fast_stop)
        u = np.arange(start, stop + 1, dtype=np.int64)
        w = u * u - shift
        hit = (w > 0) & (w % M == 0)
        if hit.any():
            # float roots only pick candidates; each is confirmed exactly
            q = w[hit] // M
            roots = np.rint(np.sqrt(q.astype(np.float64))).astype(np.int64)
            for candidate in u[hit][np.abs(roots * roots - q) <= 2 * roots + 1].tolist():
                solution = _solution_at(M, s, nu, candidate)
                if solution is not None:
                    return solution
        start = stop + 1

    for u in range(start, bound + 1):
        solution = _solution_at(M, s, nu, u)
        if solution is not None:
            return solution
    logger.debug(f"No solution of norm {s * nu} in Q(sqrt {M}) with trace <= {bound}")
    return None
