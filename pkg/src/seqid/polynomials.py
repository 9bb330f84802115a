"""Dense univariate polynomials with exact coefficients.

A polynomial is a tuple of coefficients, constant term first, with trailing
zeros stripped, so the zero polynomial is ``()``.  The same ``Poly`` class
serves three roles:

* IntPoly -- int coefficients
* RatPoly -- ``fractions.Fraction`` coefficients
* SPoly   -- ``Poly`` coefficients, i.e. an integer polynomial in ``s`` for
  each power of the main variable
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Any, Iterable

__all__ = [
    "Poly",
    "poly_add",
    "poly_sub",
    "poly_mul",
    "poly_scale",
    "poly_eval",
    "binomial",
    "clear_denominators",
    "spoly_substitute",
    "S",
    "X",
]


def _strip(coeffs: Iterable[Any]) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Poly:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Any] = ()) -> None:
        self._c = _strip(coeffs)

    @classmethod
    def monomial(cls, degree: int, coeff: Any = 1) -> Poly:
        return cls([0] * degree + [coeff])

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._c) - 1

    def __getitem__(self, k: int) -> Any:
        return self._c[k] if 0 <= k < len(self._c) else 0

    def __len__(self) -> int:
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == _strip([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"Poly({list(self._c)!r})"

    def __add__(self, other: Any) -> Poly:
        if not isinstance(other, Poly):
            other = Poly([other])
        n = max(len(self._c), len(other._c))
        return Poly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(-c for c in self._c)

    def __sub__(self, other: Any) -> Poly:
        return self + (-other)

    def __rsub__(self, other: Any) -> Poly:
        return (-self) + other

    def __mul__(self, other: Any) -> Poly:
        if not isinstance(other, Poly):
            return Poly(c * other for c in self._c)
        if not self._c or not other._c:
            return Poly()
        out: list[Any] = [0] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            for j, b in enumerate(other._c):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    def __rmul__(self, other: Any) -> Poly:
        return Poly(other * c for c in self._c)

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative power")
        result, base = Poly([1]), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __call__(self, x: Any) -> Any:
        return poly_eval(self, x)

    def map(self, f) -> Poly:
        """Apply ``f`` to every coefficient and renormalize."""
        return Poly(f(c) for c in self._c)


X = Poly([0, 1])
S = Poly([0, 1])


def poly_add(p: Poly, q: Poly) -> Poly:
    return Poly(p) + Poly(q)


def poly_sub(p: Poly, q: Poly) -> Poly:
    return Poly(p) - Poly(q)


def poly_mul(p: Poly, q: Poly) -> Poly:
    return Poly(p) * Poly(q)


def poly_scale(p: Poly, c: Any) -> Poly:
    return Poly(p) * c


def poly_eval(p: Poly, x: Any) -> Any:
    """Horner evaluation.  Exact for int, Fraction or nested Poly inputs."""
    acc: Any = 0
    for c in reversed(Poly(p).coeffs):
        acc = acc * x + c
    return acc


def binomial(n: int, k: int) -> int:
    """C(n, k), zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError(f"binomial({n}, {k}) needs non-negative arguments")
    return math.comb(n, k)


def clear_denominators(p: Poly) -> tuple[Poly, int]:
    """Return ``(q, d)`` with ``d`` the least positive integer making ``q = d*p`` integral."""
    p = Poly(p)
    d = 1
    for c in p:
        d = math.lcm(d, Fraction(c).denominator)
    q = Poly(int(Fraction(c) * d) for c in p)
    return q, d


def spoly_substitute(p: Poly, s0: int) -> Poly:
    """Evaluate every s-coefficient of an SPoly at ``s0``; yields an IntPoly."""
    return Poly(poly_eval(c, s0) if isinstance(c, Poly) else c for c in Poly(p))
