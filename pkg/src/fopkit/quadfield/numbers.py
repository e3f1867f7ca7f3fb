"""Real quadratic integers in half coordinates: z = (u + v sqrt(M)) / 2."""

import math
from dataclasses import dataclass

from fopkit.arith.factor import is_squarefree
from fopkit.exceptions import InvalidInputError


@dataclass(frozen=True, slots=True)
class QuadInt:
    """
    Element (u + v sqrt(M)) / 2 of the ring of integers of Q(sqrt(M)).

    u is the trace; u = v (mod 2), and odd coordinates need M = 1 (mod 4).
    """

    M: int
    u: int
    v: int

    def __post_init__(self):
        if self.M in (0, 1):
            raise InvalidInputError(f"M={self.M} is not a quadratic radical", "QuadInt")
        if (self.u - self.v) % 2:
            raise InvalidInputError(f"u={self.u} and v={self.v} differ in parity", "QuadInt")
        if self.u % 2 and self.M % 4 != 1:
            raise InvalidInputError(f"odd coordinates need M = 1 mod 4, got M={self.M}", "QuadInt")

    @classmethod
    def one(cls, M: int) -> "QuadInt":
        return cls(M, 2, 0)

    @classmethod
    def from_integral(cls, M: int, a: int, b: int) -> "QuadInt":
        """a + b sqrt(M)."""
        return cls(M, 2 * a, 2 * b)

    @property
    def norm(self) -> int:
        return (self.u * self.u - self.M * self.v * self.v) // 4

    @property
    def trace(self) -> int:
        return self.u

    def conj(self) -> "QuadInt":
        return QuadInt(self.M, self.u, -self.v)

    def __neg__(self) -> "QuadInt":
        return QuadInt(self.M, -self.u, -self.v)

    def __mul__(self, other: "QuadInt") -> "QuadInt":
        if not isinstance(other, QuadInt):
            return NotImplemented
        if other.M != self.M:
            raise InvalidInputError(f"cannot multiply across radicals {self.M} and {other.M}", "QuadInt")
        u = (self.u * other.u + self.M * self.v * other.v) // 2
        v = (self.u * other.v + self.v * other.u) // 2
        return QuadInt(self.M, u, v)

    def __pow__(self, n: int) -> "QuadInt":
        if n < 0:
            if abs(self.norm) != 1:
                raise InvalidInputError("only units have integral inverses", "QuadInt")
            inverse = self.conj() if self.norm == 1 else -self.conj()
            return inverse ** (-n)
        result = QuadInt.one(self.M)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def log_value(self) -> float:
        """Natural log of the real embedding, for u, v >= 0 not both zero."""
        if self.u < 0 or self.v < 0 or (self.u == 0 and self.v == 0):
            raise InvalidInputError("log_value needs nonnegative coordinates", "QuadInt")
        parts = []
        if self.u:
            parts.append(math.log(self.u))
        if self.v:
            parts.append(math.log(self.v) + 0.5 * math.log(self.M))
        hi, lo = max(parts), min(parts)
        if len(parts) == 1:
            return hi - math.log(2)
        return hi + math.log1p(math.exp(lo - hi)) - math.log(2)

    def is_greater_than_one(self) -> bool:
        """Exact test of (u + v sqrt M)/2 > 1."""
        # u + v sqrt(M) > 2  <=>  v sqrt(M) > 2 - u
        rhs = 2 - self.u
        if self.v >= 0:
            return rhs < 0 or self.M * self.v * self.v > rhs * rhs
        return rhs < 0 and self.M * self.v * self.v < rhs * rhs

    def __str__(self) -> str:
        return f"({self.u} + {self.v}*sqrt({self.M}))/2"


def mul(x: QuadInt, y: QuadInt) -> QuadInt:
    return x * y


def norm(x: QuadInt) -> int:
    return x.norm


def trace(x: QuadInt) -> int:
    return x.trace


def conj(x: QuadInt) -> QuadInt:
    return x.conj()


def fundamental_discriminant(M: int) -> int:
    """Discriminant of Q(sqrt M) for a radical already known to be square-free."""
    return M if M % 4 == 1 else 4 * M


def discriminant(M: int) -> int:
    """
    Discriminant of Q(sqrt M).

    Args:
        M: Square-free integer, not 0 or 1 (negative allowed)

    Returns:
        M if M = 1 (mod 4), else 4M
    """
    if M in (0, 1):
        raise InvalidInputError(f"M={M} is degenerate", "discriminant")
    if not is_squarefree(M):
        raise InvalidInputError(f"M={M} is not square-free", "discriminant")
    return fundamental_discriminant(M)
