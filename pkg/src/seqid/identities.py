"""Identity families as coefficient data.

Nothing here evaluates anything at a concrete index except where a sequence
constant (P_r, Q_r) is baked into a coefficient.  Evaluation and comparison
against brute force live in :mod:`seqid.verifier`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from . import sequences
from .polynomials import Poly, S, binomial, poly_eval, spoly_substitute
from .sequences import PELL, SequenceSpec

__all__ = [
    "SIGN_RULES",
    "ParityPolyPair",
    "OddMultipleIdentity",
    "PowerReductionTerm",
    "PowerReduction",
    "MelhamIdentity",
    "odd_multiple_coefficient",
    "odd_multiple_poly",
    "general_odd_multiple_poly",
    "power_reduction",
    "partial_sum_closed_form",
    "melham_sum_poly",
    "melham_closed_form",
    "melham_multiplier",
]


def _check_m(m: int, low: int = 0) -> None:
    if isinstance(m, bool) or not isinstance(m, int):
        raise TypeError(f"m must be an int, got {type(m).__name__}")
    if m < low:
        raise ValueError(f"m must be >= {low}, got {m}")


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{what}: {num} is not divisible by {den}")
    return q


@dataclass(frozen=True)
class ParityPolyPair:
    """The two sign patterns of an identity whose signs depend on n mod 2."""

    even_n: Poly
    odd_n: Poly

    def for_index(self, n: int) -> Poly:
        return self.odd_n if n % 2 else self.even_n

    def for_parity(self, parity: str) -> Poly:
        if parity == "even":
            return self.even_n
        if parity == "odd":
            return self.odd_n
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")


@dataclass(frozen=True)
class OddMultipleIdentity:
    """X_{(2m+1)n} as an odd polynomial in X_n, one polynomial per parity of n.

    For the Pell family coefficients are ints; for the general family they are
    integer polynomials in ``s`` (see :func:`general_odd_multiple_poly`).
    """

    m: int
    pair: ParityPolyPair
    variable: str = "P_n"

    @property
    def multiple(self) -> int:
        return 2 * self.m + 1

    @property
    def general(self) -> bool:
        return self.variable == "A_n"

    def polynomial(self, n: int, s: int | None = None) -> Poly:
        """The integer polynomial that applies at index ``n``.

        The general family needs ``s`` to turn its Z[s] coefficients into ints.
        """
        p = self.pair.for_index(n)
        if self.general:
            if s is None:
                raise ValueError("general identity needs s")
            p = spoly_substitute(p, s)
        return p

    def rhs(self, n: int, spec: SequenceSpec | int = PELL) -> int:
        """Right-hand side at index n, using the fast term routine for X_n."""
        spec = sequences._as_spec(spec)
        if not self.general and spec.s != 2:
            raise ValueError("the Pell identity only applies to s = 2")
        return poly_eval(self.polynomial(n, spec.s), sequences.term(spec, n))


def odd_multiple_coefficient(m: int, i: int) -> int:
    """Unsigned (2m+1)/(2i+1) * C(m+i, 2i), divided exactly."""
    return _exact_div((2 * m + 1) * binomial(m + i, 2 * i), 2 * i + 1, f"coefficient m={m} i={i}")


def _odd_multiple_pair(m: int, growth) -> ParityPolyPair:
    even = [0] * (2 * m + 2)
    odd = [0] * (2 * m + 2)
    for i in range(m + 1):
        c = growth(i) * odd_multiple_coefficient(m, i)
        even[2 * i + 1] = c
        odd[2 * i + 1] = -c if (m + i) % 2 else c
    return ParityPolyPair(Poly(even), Poly(odd))


def odd_multiple_poly(m: int) -> OddMultipleIdentity:
    """P_{(2m+1)n} as a polynomial in P_n.

    Coefficient of X^{2i+1} is (-1)^{n(m+i)} 8^i (2m+1)/(2i+1) C(m+i, 2i).

    >>> odd_multiple_poly(1).pair.odd_n
    Poly([0, -3, 0, 8])
    """
    _check_m(m)
    return OddMultipleIdentity(m, _odd_multiple_pair(m, lambda i: 8**i), "P_n")


def general_odd_multiple_poly(m: int) -> OddMultipleIdentity:
    """A_{(2m+1)n} as a polynomial in A_n with coefficients in Z[s]; 8 becomes s^2 + 4."""
    _check_m(m)
    disc = S * S + 4
    return OddMultipleIdentity(m, _odd_multiple_pair(m, lambda i: disc**i), "A_n")


# Sign exponents for the power reduction.  "j(n+1)" follows from
# (gamma*delta)^{jn} = (-1)^{jn} times the (-1)^j of the binomial expansion;
# "j(n+m)" is the competing variant and is kept so the verifier can refute it.
SIGN_RULES = ("j(n+1)", "j(n+m)")


@dataclass(frozen=True)
class PowerReductionTerm:
    j: int
    binom: int
    index_multiplier: int  # 2m+1-2j


@dataclass(frozen=True)
class PowerReduction:
    """P_n^{2m+1} = scale * sum_j sign(j, n) * binom_j * P_{(2m+1-2j)n}."""

    m: int
    scale: Fraction
    terms: tuple[PowerReductionTerm, ...]
    sign_rule: str = "j(n+1)"

    def sign(self, j: int, n: int) -> int:
        if self.sign_rule == "j(n+1)":
            e = j * (n + 1)
        elif self.sign_rule == "j(n+m)":
            e = j * (n + self.m)
        else:
            raise ValueError(f"unknown sign rule {self.sign_rule!r}")
        return -1 if e % 2 else 1

    def numerator(self, n: int, term=None) -> int:
        """The integer bracket sum at index n, before applying ``scale``."""
        term = term or (lambda k: sequences.term(PELL, k))
        return sum(self.sign(t.j, n) * t.binom * term(t.index_multiplier * n) for t in self.terms)

    def evaluate(self, n: int, term=None) -> Fraction:
        return self.scale * self.numerator(n, term)


def power_reduction(m: int, sign_rule: str = "j(n+1)") -> PowerReduction:
    """Rewrite P_n^{2m+1} through P_{(2m+1)n}, P_{(2m-1)n}, ..., P_n.

    ``sign_rule`` selects the sign exponent; only the default is an identity.
    """
    _check_m(m)
    if sign_rule not in SIGN_RULES:
        raise ValueError(f"sign_rule must be one of {SIGN_RULES}, got {sign_rule!r}")
    terms = tuple(PowerReductionTerm(j, binomial(2 * m + 1, j), 2 * m + 1 - 2 * j) for j in range(m + 1))
    return PowerReduction(m, Fraction(1, 8**m), terms, sign_rule)


def partial_sum_closed_form(m: int, n: int) -> int:
    """sum_{k=1}^{n} P_{2mk} computed as (P_{m(2n+1)} - P_m) / Q_m.

    Only odd m is accepted.  The telescoping step behind the closed form is
    Q_m P_x = P_{x+m} + (-1)^m P_{x-m}; for even m the terms do not cancel and
    the formula is wrong (m=2, n=2 gives 396, the true sum is 420).
    """
    _check_m(m, 1)
    sequences._check_index(n)
    if m % 2 == 0:
        raise ValueError(f"closed form holds for odd m only, got m={m}")
    num = sequences.term(PELL, m * (2 * n + 1)) - sequences.term(PELL, m)
    return _exact_div(num, sequences.companion(PELL, m), f"partial sum m={m} n={n}")


def melham_multiplier(m: int) -> int:
    """Q_1 * Q_3 * ... * Q_{2m+1}."""
    _check_m(m)
    return reduce(lambda acc, j: acc * sequences.companion(PELL, 2 * j + 1), range(m + 1), 1)


@dataclass(frozen=True)
class MelhamIdentity:
    """sum_{k=1}^{n} P_{2k}^{2m+1} as a polynomial in X = P_{2n+1}."""

    m: int
    rational_poly: Poly
    cleared_poly: Poly
    multiplier: int

    @property
    def exponent(self) -> int:
        return 2 * self.m + 1


def melham_sum_poly(m: int) -> MelhamIdentity:
    """Build the Melham polynomial by composing the lower-level identities.

    For each j, power_reduction at the even index 2k has sign (-1)^j; summing
    P_{2rk} over k with r = 2m+1-2j (always odd) gives
    (P_{r(2n+1)} - P_r)/Q_r; and P_{r(2n+1)} is odd_multiple_poly((r-1)/2) at
    the odd index 2n+1.
    """
    _check_m(m)
    red = power_reduction(m)
    total = Poly()
    for t in red.terms:
        r = t.index_multiplier
        q_r = sequences.companion(PELL, r)
        sign = red.sign(t.j, 2)  # any even index
        inner = odd_multiple_poly((r - 1) // 2).pair.odd_n - sequences.term(PELL, r)
        total = total + inner * (red.scale * Fraction(sign * t.binom, q_r))
    rational = total.map(Fraction)
    mult = melham_multiplier(m)
    scaled = rational * mult
    bad = [c for c in scaled if Fraction(c).denominator != 1]
    if bad:
        raise ArithmeticError(f"Melham m={m}: multiplier {mult} leaves non-integer coefficients {bad}")
    cleared = scaled.map(lambda c: int(Fraction(c)))
    return MelhamIdentity(m, rational, cleared, mult)


def melham_closed_form(m: int) -> Poly:
    """The same polynomial from the explicit double sum, without the pipeline.

    coefficient of X^{2i+1}:
        sum_{j=0}^{m-i} (-1)^{m+i} 2^{3(i-m)} (2m-2j+1) C(2m+1,j) C(m-j+i,2i)
                        / (Q_{2m+1-2j} (2i+1))
    constant:
        sum_{j=0}^{m} (-1)^{j+1} C(2m+1,j) P_{2m+1-2j} / (2^{3m} Q_{2m+1-2j})
    """
    _check_m(m)
    q = [sequences.companion(PELL, k) for k in range(2 * m + 2)]
    p = [sequences.term_naive(PELL, k) for k in range(2 * m + 2)]
    coeffs: list[Fraction] = [Fraction(0)] * (2 * m + 2)
    for i in range(m + 1):
        acc = Fraction(0)
        for j in range(m - i + 1):
            r = 2 * m + 1 - 2 * j
            acc += Fraction(
                (-1) ** (m + i) * r * binomial(2 * m + 1, j) * binomial(m - j + i, 2 * i),
                q[r] * (2 * i + 1),
            )
        coeffs[2 * i + 1] = acc * Fraction(8**i, 8**m)
    coeffs[0] = sum(
        (Fraction((-1) ** (j + 1) * binomial(2 * m + 1, j) * p[2 * m + 1 - 2 * j], 8**m * q[2 * m + 1 - 2 * j])
         for j in range(m + 1)),
        Fraction(0),
    )
    return Poly(coeffs)
