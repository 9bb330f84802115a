"""Grid verification of the generated identities against brute force.

Every ``verify_*`` function walks a deterministic parameter grid, compares
both sides exactly and returns a :class:`VerificationReport`.  Failures are
data: they are collected (up to :data:`MAX_FAILURES`) rather than raised.

The left-hand sides come from tables built by literally iterating the
recurrence, never from the fast-doubling path, so a bug in ``term`` and a bug
in a generator cannot cancel out.  Generators can be swapped through the
``factory`` arguments, which is how the fault-injection tests corrupt them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from . import identities, sequences
from .polynomials import poly_eval, spoly_substitute
from .sequences import SequenceSpec

__all__ = [
    "MAX_FAILURES",
    "DEFAULT_M_MAX",
    "DEFAULT_MELHAM_M_MAX",
    "DEFAULT_N_MAX",
    "DEFAULT_S_MAX",
    "ADDITION_M_MAX",
    "SUITES",
    "VerificationReport",
    "recurrence_table",
    "sign_rule_counterexamples",
    "verify_sequences",
    "verify_odd_multiple",
    "verify_general_odd_multiple",
    "verify_power_reduction",
    "verify_partial_sum",
    "verify_melham",
    "run_suite",
]

MAX_FAILURES = 32
DEFAULT_M_MAX = 10
DEFAULT_MELHAM_M_MAX = 6
DEFAULT_N_MAX = 64
DEFAULT_S_MAX = 8
ADDITION_M_MAX = 60  # first summand range for the addition law
MULTIPLICATIVE_M_MAX = 16


def _jsonable(v: Any) -> Any:
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, (int, Fraction)):
        return str(v)
    if isinstance(v, sequences.QuadraticInteger):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    return str(v)


@dataclass
class VerificationReport:
    identity_id: str
    parameter_ranges: dict[str, Any]
    checks_run: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)
    failure_count: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "fail" if self.failures else "pass"

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, params: dict[str, Any], left: Any, right: Any) -> bool:
        self.checks_run += 1
        if left == right:
            return True
        self.failure_count += 1
        if len(self.failures) < MAX_FAILURES:
            self.failures.append({"params": params, "left": left, "right": right})
        return False

    def to_dict(self) -> dict[str, Any]:
        return {
            "identity_id": self.identity_id,
            "parameter_ranges": self.parameter_ranges,
            "checks_run": self.checks_run,
            "status": self.status,
            "failure_count": self.failure_count,
            "failures": [
                {"params": f["params"], "left": _jsonable(f["left"]), "right": _jsonable(f["right"])}
                for f in self.failures
            ],
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def summary(self) -> str:
        ranges = ", ".join(f"{k}={v}" for k, v in self.parameter_ranges.items())
        line = f"[{self.status.upper()}] {self.identity_id} ({ranges}): {self.checks_run} checks, {self.failure_count} failures"
        lines = [line]
        for f in self.failures[:5]:
            lines.append(f"    failure at {f['params']}: {f['left']} != {f['right']}")
        lines.extend(f"    note: {n}" for n in self.notes)
        return "\n".join(lines)


def _check_bound(name: str, value: int, low: int = 0) -> None:
    if isinstance(value, bool) or not isinstance(value, int) or value < low:
        raise ValueError(f"{name} must be an int >= {low}, got {value!r}")


def recurrence_table(spec: SequenceSpec | int, upto: int) -> list[int]:
    """[A_0, ..., A_upto] by walking the recurrence."""
    spec = sequences._as_spec(spec)
    out = [0, 1]
    s = spec.s
    while len(out) <= upto:
        out.append(s * out[-1] + out[-2])
    return out[: upto + 1]


def verify_sequences(s_max: int = DEFAULT_S_MAX, n_max: int = DEFAULT_N_MAX) -> VerificationReport:
    """Term-path agreement and the classical laws for every s in [1, s_max].

    Laws and their grids (per s):

    * ``equivalence`` n in [0, n_max]: term == term_naive == term_pair[0],
      term_pair[1] == A_{n+1}, and matrix_term agrees for n >= 1
    * ``cassini`` n in [1, n_max]: A_{n-1}A_{n+1} - A_n^2 = (-1)^n
    * ``companion`` n in [0, n_max]: B_n = A_{n-1} + A_{n+1} (B_0 = 2)
    * ``norm`` n in [0, n_max]: B_n^2 - (s^2+4) A_n^2 = 4(-1)^n
    * ``pell-equation`` (s = 2 only) n in [0, n_max]: (Q_n/2)^2 - 2 P_n^2 = (-1)^n
    * ``binet`` n in [0, n_max]: alpha^n = (B_n + A_n sqrt(D))/2
    * ``addition`` m in [1, min(60, n_max)], n in [0, n_max - m]
    * ``multiplicativity`` m in [0, min(16, n_max)], n in [0, n_max - m]
    """
    _check_bound("s_max", s_max, 1)
    _check_bound("n_max", n_max)
    add_m = min(ADDITION_M_MAX, n_max)
    mul_m = min(MULTIPLICATIVE_M_MAX, n_max)
    report = VerificationReport(
        "sequences",
        {"s": [1, s_max], "n": [0, n_max], "addition_m": [1, add_m], "multiplicativity_m": [0, mul_m]},
    )
    for s in range(1, s_max + 1):
        spec = SequenceSpec(s)
        d = spec.discriminant
        t = recurrence_table(spec, n_max + 1)
        powers = [sequences.silver_power(spec, n) for n in range(n_max + 1)]
        for n in range(n_max + 1):
            fast = sequences.term(spec, n)
            pair = sequences.term_pair(spec, n)
            matrix = sequences.matrix_term(spec, n) if n >= 1 else t[0]
            naive = sequences.term_naive(spec, n)
            report.check(
                {"law": "equivalence", "s": s, "n": n},
                (t[n], t[n], t[n], t[n + 1], t[n]),
                (fast, naive, pair[0], pair[1], matrix),
            )
        for n in range(1, n_max + 1):
            report.check({"law": "cassini", "s": s, "n": n}, t[n - 1] * t[n + 1] - t[n] ** 2, (-1) ** n)
        for n in range(n_max + 1):
            expected = 2 if n == 0 else t[n - 1] + t[n + 1]
            report.check({"law": "companion", "s": s, "n": n}, sequences.companion(spec, n), expected)
        for n in range(n_max + 1):
            b = sequences.companion(spec, n)
            report.check({"law": "norm", "s": s, "n": n}, b * b - d * t[n] ** 2, 4 * (-1) ** n)
            if s == 2:
                report.check({"law": "pell-equation", "s": s, "n": n}, (b // 2) ** 2 - 2 * t[n] ** 2, (-1) ** n)
        for n in range(n_max + 1):
            w = powers[n]
            report.check({"law": "binet", "s": s, "n": n}, (w.a, w.b), (sequences.companion(spec, n), t[n]))
        for m in range(1, add_m + 1):
            for n in range(n_max - m + 1):
                report.check(
                    {"law": "addition", "s": s, "m": m, "n": n},
                    t[m + n],
                    t[m - 1] * t[n] + t[m] * t[n + 1],
                )
        for m in range(mul_m + 1):
            for n in range(n_max - m + 1):
                report.check({"law": "multiplicativity", "s": s, "m": m, "n": n}, powers[m + n], powers[m] * powers[n])
    return report


def verify_odd_multiple(
    m_max: int = DEFAULT_M_MAX,
    n_max: int = DEFAULT_N_MAX,
    factory: Callable[[int], identities.OddMultipleIdentity] = identities.odd_multiple_poly,
) -> VerificationReport:
    """P_{(2m+1)n} against the parity-selected polynomial at P_n."""
    _check_bound("m_max", m_max)
    _check_bound("n_max", n_max)
    report = VerificationReport("odd-multiple", {"m": [0, m_max], "n": [0, n_max]})
    t = recurrence_table(2, (2 * m_max + 1) * n_max)
    for m in range(m_max + 1):
        ident = factory(m)
        for n in range(n_max + 1):
            rhs = poly_eval(ident.pair.for_index(n), t[n])
            report.check({"m": m, "n": n}, t[(2 * m + 1) * n], rhs)
    return report


def verify_general_odd_multiple(
    m_max: int = DEFAULT_M_MAX,
    n_max: int = DEFAULT_N_MAX,
    s_max: int = DEFAULT_S_MAX,
    factory: Callable[[int], identities.OddMultipleIdentity] = identities.general_odd_multiple_poly,
) -> VerificationReport:
    """A_{(2m+1)n}(s) against the Z[s] polynomial specialized at s."""
    _check_bound("m_max", m_max)
    _check_bound("n_max", n_max)
    _check_bound("s_max", s_max, 1)
    report = VerificationReport("general-odd-multiple", {"s": [1, s_max], "m": [0, m_max], "n": [0, n_max]})
    idents = [factory(m) for m in range(m_max + 1)]
    for s in range(1, s_max + 1):
        t = recurrence_table(s, (2 * m_max + 1) * n_max)
        for m, ident in enumerate(idents):
            even = spoly_substitute(ident.pair.even_n, s)
            odd = spoly_substitute(ident.pair.odd_n, s)
            for n in range(n_max + 1):
                rhs = poly_eval(odd if n % 2 else even, t[n])
                report.check({"s": s, "m": m, "n": n}, t[(2 * m + 1) * n], rhs)
    return report


def sign_rule_counterexamples(sign_rule: str, m_max: int, n_max: int) -> list[dict[str, Any]]:
    """Cells of the (m, n) grid where the power reduction under ``sign_rule`` is false.

    Each entry keeps the unreduced bracket sum and the 8^m denominator so the
    wrong value reads exactly as computed (e.g. 14/64, not 7/32).
    """
    t = recurrence_table(2, (2 * m_max + 1) * n_max)
    out = []
    for m in range(m_max + 1):
        red = identities.power_reduction(m, sign_rule)
        for n in range(n_max + 1):
            num = red.numerator(n, t.__getitem__)
            expected = t[n] ** (2 * m + 1)
            if Fraction(num, 8**m) != expected:
                out.append({"m": m, "n": n, "numerator": num, "denominator": 8**m, "expected": expected})
    return out


def verify_power_reduction(
    m_max: int = DEFAULT_M_MAX,
    n_max: int = DEFAULT_N_MAX,
    factory: Callable[[int], identities.PowerReduction] = identities.power_reduction,
) -> VerificationReport:
    """P_n^{2m+1} against the scaled combination of P_{(2m+1-2j)n}.

    Also runs both candidate sign exponents over the same grid and records in
    the notes which one survives, with the first counterexample to the other.
    """
    _check_bound("m_max", m_max)
    _check_bound("n_max", n_max)
    report = VerificationReport("power-reduction", {"m": [0, m_max], "n": [0, n_max]})
    t = recurrence_table(2, (2 * m_max + 1) * n_max)
    for m in range(m_max + 1):
        red = factory(m)
        for n in range(n_max + 1):
            report.check({"m": m, "n": n}, Fraction(t[n] ** (2 * m + 1)), red.evaluate(n, t.__getitem__))
    cells = (m_max + 1) * (n_max + 1)
    for rule in identities.SIGN_RULES:
        bad = sign_rule_counterexamples(rule, m_max, n_max)
        if not bad:
            report.notes.append(f"sign rule (-1)^{{{rule}}}: holds on all {cells} cells")
            continue
        first = bad[0]
        report.notes.append(
            f"sign rule (-1)^{{{rule}}}: fails on {len(bad)} of {cells} cells; first counterexample "
            f"m={first['m']}, n={first['n']}: {first['numerator']}/{first['denominator']} "
            f"but P_{first['n']}^{2 * first['m'] + 1} = {first['expected']}"
        )
    return report


def _direct_partial_sum(t: list[int]) -> Callable[[int, int], int]:
    return lambda m, n: sum(t[2 * m * k] for k in range(1, n + 1))


def verify_partial_sum(
    m_max: int = DEFAULT_M_MAX,
    n_max: int = DEFAULT_N_MAX,
    closed_form: Callable[[int, int], int] = identities.partial_sum_closed_form,
    oracle: Callable[[int, int], int] | None = None,
) -> VerificationReport:
    """sum_{k<=n} P_{2mk} by direct summation against the closed form, odd m only.

    Even m is probed separately and reported in the notes: the closed form
    (P_{m(2n+1)} - P_m)/Q_m does not hold there.
    """
    _check_bound("m_max", m_max)
    _check_bound("n_max", n_max)
    odd_ms = list(range(1, m_max + 1, 2))
    report = VerificationReport("partial-sum", {"m": odd_ms, "n": [0, n_max]})
    t = recurrence_table(2, 2 * max(m_max, 1) * n_max + max(m_max, 1) + 1)
    oracle = oracle or _direct_partial_sum(t)
    for m in odd_ms:
        for n in range(n_max + 1):
            try:
                rhs = closed_form(m, n)
            except ArithmeticError as exc:
                rhs = f"error: {exc}"
            report.check({"m": m, "n": n}, oracle(m, n), rhs)
    direct = _direct_partial_sum(t)
    bad = []
    for m in range(2, m_max + 1, 2):
        q = sequences.companion(2, m)
        for n in range(n_max + 1):
            literal = Fraction(t[m * (2 * n + 1)] - t[m], q)
            if literal != direct(m, n):
                bad.append((m, n, literal, direct(m, n)))
    if m_max < 2:
        report.notes.append("even m not probed (m_max < 2)")
    elif bad:
        m, n, literal, true = bad[0]
        total = len(range(2, m_max + 1, 2)) * (n_max + 1)
        report.notes.append(
            f"closed form is false for even m: {len(bad)} of {total} even-m cells disagree; "
            f"first m={m}, n={n}: formula gives {literal}, direct sum is {true}"
        )
    else:
        report.notes.append("closed form also held on every even-m cell probed")
    return report


def verify_melham(
    m_max: int = DEFAULT_MELHAM_M_MAX,
    n_max: int = DEFAULT_N_MAX,
    factory: Callable[[int], identities.MelhamIdentity] = identities.melham_sum_poly,
) -> VerificationReport:
    """Direct sums of P_{2k}^{2m+1} against the Melham polynomials at P_{2n+1}.

    Per (m, n) both the rational form and the cleared integer form are checked;
    per m the pipeline polynomial is also compared with the explicit double sum.
    """
    _check_bound("m_max", m_max)
    _check_bound("n_max", n_max)
    report = VerificationReport(
        "melham", {"m": [0, m_max], "n": [0, n_max], "form": ["rational", "cleared", "closed-form(per m)"]}
    )
    t = recurrence_table(2, 2 * n_max + 1)
    for m in range(m_max + 1):
        ident = factory(m)
        report.check({"m": m, "form": "closed-form"}, identities.melham_closed_form(m), ident.rational_poly)
        e = 2 * m + 1
        total = 0
        for n in range(n_max + 1):
            if n:
                total += t[2 * n] ** e
            x = t[2 * n + 1]
            report.check({"m": m, "n": n, "form": "rational"}, Fraction(total), poly_eval(ident.rational_poly, x))
            report.check({"m": m, "n": n, "form": "cleared"}, ident.multiplier * total, poly_eval(ident.cleared_poly, x))
    return report


SUITES = ("sequences", "odd-multiple", "general", "power-reduction", "partial-sum", "melham")


def run_suite(
    suite: str,
    m_max: int | None = None,
    n_max: int = DEFAULT_N_MAX,
    s_max: int = DEFAULT_S_MAX,
) -> list[VerificationReport]:
    """Run one named suite, or every suite for ``"all"``, in a fixed order.

    ``m_max=None`` means the per-suite default (6 for Melham, 10 otherwise).
    """
    if suite == "all":
        return [r for name in SUITES for r in run_suite(name, m_max, n_max, s_max)]
    m = DEFAULT_M_MAX if m_max is None else m_max
    if suite == "sequences":
        return [verify_sequences(s_max, n_max)]
    if suite == "odd-multiple":
        return [verify_odd_multiple(m, n_max)]
    if suite == "general":
        return [verify_general_odd_multiple(m, n_max, s_max)]
    if suite == "power-reduction":
        return [verify_power_reduction(m, n_max)]
    if suite == "partial-sum":
        return [verify_partial_sum(m, n_max)]
    if suite == "melham":
        return [verify_melham(DEFAULT_MELHAM_M_MAX if m_max is None else m_max, n_max)]
    raise ValueError(f"unknown suite {suite!r}; expected 'all' or one of {SUITES}")
