"""Polynomial radical families m(t) swept by the first-occurrence process."""

from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import ClassVar, Protocol, runtime_checkable

from fopkit.arith.primes import first_primes
from fopkit.exceptions import FamilyValidationError
from fopkit.quadfield.numbers import QuadInt


@runtime_checkable
class RadicalFamily(Protocol):
    """Anything the engine can sweep: parameters t, radicands m(t), constructed elements."""

    name: str
    kind: ClassVar[str]

    def points(self, B: int) -> Sequence[int]:
        """Sweep parameters for bound B, in sweep order."""
        ...

    def nominal_size(self, B: int) -> int:
        """Number of sweep points the gap is measured against."""
        ...

    def radicand(self, t: int) -> int: ...

    def coefficients(self) -> tuple[int, ...] | None:
        """m as a polynomial in t (constant term first), or None when it is not one."""
        ...

    def element(self, t: int, M: int, r: int) -> QuadInt | None:
        """The element of Q(sqrt M) built at t, None for degenerate radicals."""
        ...


@dataclass(frozen=True)
class TraceMap:
    """T(t) = c t^h + c0, or T(t) = prime(t) (the t-th prime)."""

    c: int = 1
    h: int = 1
    c0: int = 0
    prime: bool = False

    def __post_init__(self):
        if self.c < 1 or self.h < 1:
            raise FamilyValidationError(f"trace map needs c >= 1 and h >= 1, got c={self.c}, h={self.h}", "TraceMap")

    def __call__(self, t: int) -> int:
        if self.prime:
            return first_primes(_prime_table_size(t))[t - 1]
        return self.c * t**self.h + self.c0

    def polynomial(self) -> tuple[int, ...] | None:
        if self.prime:
            return None
        coeffs = [0] * (self.h + 1)
        coeffs[0] += self.c0
        coeffs[self.h] += self.c
        return tuple(coeffs)

    def __str__(self) -> str:
        if self.prime:
            return "prime(t)"
        head = "t" if self.h == 1 else f"t^{self.h}"
        head = head if self.c == 1 else f"{self.c}*{head}"
        return head if not self.c0 else f"({head}{self.c0:+d})"


def _prime_table_size(t: int) -> int:
    # round up so neighbouring calls share one cached table
    size = 1024
    while size < t:
        size *= 2
    return size


@dataclass(frozen=True)
class ResidueFilter:
    """Keep only t with t mod modulus in residues."""

    modulus: int
    residues: frozenset[int]

    def __post_init__(self):
        if self.modulus < 2 or not self.residues:
            raise FamilyValidationError(
                f"residue filter needs modulus >= 2 and residues, got {self.modulus}, {set(self.residues)}",
                "ResidueFilter",
            )

    def accepts(self, t: int) -> bool:
        return t % self.modulus in self.residues


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


@dataclass(frozen=True)
class PolyFamily:
    """
    m(T) = T^2 - 4 s nu with T = T(t); the element is A = (T + r sqrt M)/2 of norm s nu.

    With normalized=True the family is m(T) = T^2 - s nu and A = T + r sqrt M.
    """

    s: int
    nu: int = 1
    trace: TraceMap = field(default_factory=TraceMap)
    normalized: bool = False
    t_start: int = 1
    residue_filter: ResidueFilter | None = None
    name: str = ""

    kind: ClassVar[str] = "quadratic"

    def __post_init__(self):
        if self.s not in (-1, 1):
            raise FamilyValidationError(f"s must be -1 or 1, got {self.s}", "PolyFamily")
        if self.nu < 1:
            raise FamilyValidationError(f"nu must be >= 1, got {self.nu}", "PolyFamily")
        if self.t_start < 0:
            raise FamilyValidationError(f"t_start must be >= 0, got {self.t_start}", "PolyFamily")
        if not self.name:
            object.__setattr__(self, "name", self.describe())

    @property
    def shift(self) -> int:
        """The constant k in m = T^2 - k."""
        return self.s * self.nu if self.normalized else 4 * self.s * self.nu

    def describe(self) -> str:
        return f"{self.trace}^2{-self.shift:+d}"

    def points(self, B: int) -> Sequence[int]:
        sweep = range(self.t_start, B + 1)
        if self.residue_filter is None:
            return sweep
        return [t for t in sweep if self.residue_filter.accepts(t)]

    def nominal_size(self, B: int) -> int:
        if self.residue_filter is None:
            return max(B, 0)
        return sum(1 for t in range(1, B + 1) if self.residue_filter.accepts(t))

    def radicand(self, t: int) -> int:
        T = self.trace(t)
        return T * T - self.shift

    def coefficients(self) -> tuple[int, ...] | None:
        poly = self.trace.polynomial()
        if poly is None:
            return None
        square = _poly_mul(poly, poly)
        square[0] -= self.shift
        return tuple(square)

    def element(self, t: int, M: int, r: int) -> QuadInt | None:
        if M < 2:
            return None
        T = self.trace(t)
        if self.normalized:
            return QuadInt(M, 2 * T, 2 * r)
        return QuadInt(M, T, r)


def radical_family(name: str) -> PolyFamily:
    """The radical-list polynomials t^2 - 1, t^2 + 1, t^2 - 4, t^2 + 4 by short name."""
    families = {
        "t2m1": PolyFamily(s=1, normalized=True, name="t^2-1"),
        "t2p1": PolyFamily(s=-1, normalized=True, name="t^2+1"),
        "t2m4": PolyFamily(s=1, name="t^2-4"),
        "t2p4": PolyFamily(s=-1, name="t^2+4"),
    }
    try:
        return families[name]
    except KeyError:
        raise FamilyValidationError(f"unknown polynomial '{name}', expected one of {sorted(families)}", name) from None


def units_family(s: int, trace: TraceMap | None = None) -> PolyFamily:
    """
    m_s(t) = T^2 - 4s, whose element E_s(T) = (T + r sqrt M)/2 is a unit of norm s.

    Polynomial traces start at t = 2 + s so that m_s(t) > 0; prime traces start at
    the third prime, T = 5.
    """
    trace = trace or TraceMap()
    return PolyFamily(s=s, trace=trace, t_start=3 if trace.prime else 2 + s)


def norm_family(s: int, nu: int) -> PolyFamily:
    """m(t) = t^2 - 4 s nu, elements of norm s nu."""
    return PolyFamily(s=s, nu=nu)
