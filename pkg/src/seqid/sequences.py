"""Exact terms of the Lucas-type sequences a(n+2) = s*a(n+1) + a(n).

With a(0) = 0 and a(1) = 1 the primary sequence A_n(s) is Pell for s = 2 and
Fibonacci for s = 1.  The companion B_n(s) = A_{n-1} + A_{n+1} is Pell-Lucas
for s = 2 and Lucas for s = 1.

Every routine works on Python ints and is exact.  ``term`` and ``term_pair``
use fast doubling; ``term_naive`` walks the recurrence and is kept as the
oracle for everything else.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "PELL",
    "FIBONACCI",
    "SequenceSpec",
    "QuadraticInteger",
    "term",
    "term_naive",
    "term_pair",
    "companion",
    "matrix_term",
    "silver_power",
]


@dataclass(frozen=True)
class SequenceSpec:
    """Selects one sequence of the family by its multiplier ``s``."""

    s: int = 2

    def __post_init__(self) -> None:
        if isinstance(self.s, bool) or not isinstance(self.s, int):
            raise TypeError(f"s must be an int, got {type(self.s).__name__}")
        if self.s < 1:
            raise ValueError(f"s must be >= 1, got {self.s}")

    @property
    def discriminant(self) -> int:
        return self.s * self.s + 4


PELL = SequenceSpec(2)
FIBONACCI = SequenceSpec(1)


def _as_spec(spec: SequenceSpec | int) -> SequenceSpec:
    return spec if isinstance(spec, SequenceSpec) else SequenceSpec(spec)


def _check_index(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"index must be an int, got {type(n).__name__}")
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")


def term_pair(spec: SequenceSpec | int, n: int) -> tuple[int, int]:
    """Return ``(A_n, A_{n+1})`` by fast doubling.

    From the addition law A_{m+n} = A_{m-1}A_n + A_m A_{n+1} with m = n = k
    and m = k+1, n = k::

        A_{2k}   = A_k * (2*A_{k+1} - s*A_k)
        A_{2k+1} = A_k**2 + A_{k+1}**2
    """
    spec = _as_spec(spec)
    _check_index(n)
    s = spec.s
    a, b = 0, 1  # (A_k, A_{k+1}) for k = 0
    for bit in bin(n)[2:]:
        a, b = a * (2 * b - s * a), a * a + b * b  # k -> 2k
        if bit == "1":
            a, b = b, s * b + a  # 2k -> 2k+1
    return a, b


def term(spec: SequenceSpec | int, n: int) -> int:
    """A_n in O(log n) big-integer multiplications."""
    return term_pair(spec, n)[0]


def term_naive(spec: SequenceSpec | int, n: int) -> int:
    """A_n by walking the recurrence n times.  Oracle for the fast paths."""
    spec = _as_spec(spec)
    _check_index(n)
    a, b = 0, 1
    for _ in range(n):
        a, b = b, spec.s * b + a
    return a


def companion(spec: SequenceSpec | int, n: int) -> int:
    """B_n = A_{n-1} + A_{n+1}, with B_0 = 2.

    Uses A_{n-1} = A_{n+1} - s*A_n, so B_n = 2*A_{n+1} - s*A_n; at n = 0 this
    gives 2 without touching a negative index.
    """
    spec = _as_spec(spec)
    a, b = term_pair(spec, n)
    return 2 * b - spec.s * a


def _mat_mul(x: tuple[int, int, int, int], y: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
    a, b, c, d = x
    e, f, g, h = y
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def matrix_term(spec: SequenceSpec | int, n: int) -> int:
    """A_n as the off-diagonal entry of [[0, 1], [1, s]]**n.

    The power equals [[A_{n-1}, A_n], [A_n, A_{n+1}]], so n = 0 is rejected.
    """
    spec = _as_spec(spec)
    _check_index(n)
    if n == 0:
        raise ValueError("matrix form needs n >= 1")
    result = (1, 0, 0, 1)
    base = (0, 1, 1, spec.s)
    k = n
    while k:
        if k & 1:
            result = _mat_mul(result, base)
        k >>= 1
        if k:
            base = _mat_mul(base, base)
    return result[1]


@dataclass(frozen=True)
class QuadraticInteger:
    """The exact number (a + b*sqrt(D)) / 2.

    Half-integer form is used for every D so that alpha = (s + sqrt(D))/2 is
    always representable.  Closure requires a even when D = 0 mod 4 (s even)
    and a = b mod 2 when D is odd (s odd).
    """

    a: int
    b: int
    D: int

    def __post_init__(self) -> None:
        if self.D <= 0:
            raise ValueError(f"discriminant must be positive, got {self.D}")
        if self.D % 4 == 0:
            ok = self.a % 2 == 0
        elif self.D % 4 == 1:
            ok = (self.a - self.b) % 2 == 0
        else:
            raise ValueError(f"discriminant must be 0 or 1 mod 4, got {self.D}")
        if not ok:
            raise ArithmeticError(f"({self.a} + {self.b}*sqrt({self.D}))/2 is not an algebraic integer")

    @classmethod
    def one(cls, D: int) -> QuadraticInteger:
        return cls(2, 0, D)

    @classmethod
    def alpha(cls, spec: SequenceSpec | int) -> QuadraticInteger:
        spec = _as_spec(spec)
        return cls(spec.s, 1, spec.discriminant)

    def _same_field(self, other: QuadraticInteger) -> None:
        if self.D != other.D:
            raise ValueError(f"mixed discriminants {self.D} and {other.D}")

    def __add__(self, other: QuadraticInteger) -> QuadraticInteger:
        if not isinstance(other, QuadraticInteger):
            return NotImplemented
        self._same_field(other)
        return QuadraticInteger(self.a + other.a, self.b + other.b, self.D)

    def __neg__(self) -> QuadraticInteger:
        return QuadraticInteger(-self.a, -self.b, self.D)

    def __sub__(self, other: QuadraticInteger) -> QuadraticInteger:
        if not isinstance(other, QuadraticInteger):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: QuadraticInteger) -> QuadraticInteger:
        if not isinstance(other, QuadraticInteger):
            return NotImplemented
        self._same_field(other)
        ra = self.a * other.a + self.D * self.b * other.b
        rb = self.a * other.b + self.b * other.a
        if ra % 2 or rb % 2:
            raise ArithmeticError("product left the ring of integers")
        return QuadraticInteger(ra // 2, rb // 2, self.D)

    def __pow__(self, n: int) -> QuadraticInteger:
        _check_index(n)
        result = QuadraticInteger.one(self.D)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def conjugate(self) -> QuadraticInteger:
        return QuadraticInteger(self.a, -self.b, self.D)

    def norm(self) -> int:
        """self * conjugate, an ordinary integer."""
        return (self.a * self.a - self.D * self.b * self.b) // 4

    def __str__(self) -> str:
        return f"({self.a} {'-' if self.b < 0 else '+'} {abs(self.b)}*sqrt({self.D}))/2"


def silver_power(spec: SequenceSpec | int, n: int) -> QuadraticInteger:
    """alpha**n for alpha = (s + sqrt(s^2+4))/2, exactly.

    The result is (B_n + A_n*sqrt(D))/2, which is the Binet form with the
    irrational parts cancelled by hand.
    """
    return QuadraticInteger.alpha(spec) ** n
