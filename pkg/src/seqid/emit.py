"""Plain-text, LaTeX and JSON renderings of identity objects.

Zero coefficients are never printed.  Big integers go to JSON as decimal
strings so no consumer has to trust a float.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .identities import MelhamIdentity, OddMultipleIdentity, PowerReduction
from .polynomials import Poly, clear_denominators

__all__ = [
    "FORMATS",
    "spoly_str",
    "poly_str",
    "odd_multiple_text",
    "melham_text",
    "power_reduction_text",
    "odd_multiple_json",
    "melham_json",
    "power_reduction_json",
    "dump_json",
]

FORMATS = ("plain", "latex", "json")


def _leading(p: Poly) -> Any:
    return p.coeffs[-1] if p else 0


def spoly_str(p: Poly, latex: bool = False) -> str:
    """Render an integer polynomial in s, highest power first: ``s^4+8*s^2+16``."""
    if not p:
        return "0"
    mul = "" if latex else "*"
    out = ""
    for k in range(p.degree, -1, -1):
        c = p[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if out else "")
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            power = "s" if k == 1 else f"s^{k}"
            body = power if a == 1 else f"{a}{mul}{power}"
        out += sign + body
    return out


def _frac(c: Fraction, latex: bool) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    if latex:
        return rf"\frac{{{c.numerator}}}{{{c.denominator}}}"
    return f"{c.numerator}/{c.denominator}"


def _split_coeff(c: Any) -> tuple[bool, Any]:
    """(negative?, magnitude) for int, Fraction or s-polynomial coefficients."""
    if isinstance(c, Poly):
        if _leading(c) < 0:
            return True, -c
        return False, c
    return c < 0, abs(c)


def _coeff_str(mag: Any, latex: bool) -> str | None:
    """None for a unit coefficient that should be omitted."""
    if isinstance(mag, Poly):
        if mag.degree == 0:
            mag = mag[0]
        else:
            return f"({spoly_str(mag, latex)})"
    if mag == 1:
        return None
    return _frac(Fraction(mag), latex)


def poly_str(p: Poly, var: str = "X", latex: bool = False, braced_power: bool = False) -> str:
    """Render highest degree first, e.g. ``8*X^3 - 3*X``.

    ``braced_power`` wraps the variable as ``{P_n}^7`` (LaTeX only).
    """
    if not p:
        return "0"
    parts: list[str] = []
    for k in range(p.degree, -1, -1):
        c = p[k]
        if c == 0:
            continue
        neg, mag = _split_coeff(c)
        if k == 0:
            body = _coeff_str(mag, latex) or "1"
            if isinstance(mag, Poly) and mag.degree > 0:
                body = spoly_str(mag, latex)
        else:
            if k == 1:
                power = var
            elif latex:
                exp = str(k) if k < 10 else f"{{{k}}}"
                power = f"{{{var}}}^{exp}" if braced_power else f"{var}^{exp}"
            else:
                power = f"{var}^{k}"
            coeff = _coeff_str(mag, latex)
            if coeff is None:
                body = power
            else:
                body = f"{coeff}{power}" if latex else f"{coeff}*{power}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


def _multiple_label(multiple: int, letter: str, latex: bool) -> str:
    if latex:
        return f"{letter}_{{{multiple}n}}" if multiple > 1 else f"{letter}_{{n}}"
    return f"{letter}({multiple}n)" if multiple > 1 else f"{letter}(n)"


def odd_multiple_text(ident: OddMultipleIdentity, parity: str, fmt: str = "plain") -> str:
    letter = ident.variable[0]
    p = ident.pair.for_parity(parity)
    if fmt == "latex":
        lhs = _multiple_label(ident.multiple, letter, True)
        return f"{lhs} = {poly_str(p, ident.variable, latex=True, braced_power=True)}"
    lhs = _multiple_label(ident.multiple, letter, False)
    return f"{lhs} = {poly_str(p)} where X = {letter}(n), n {parity}"


def _q_product(m: int, latex: bool) -> str:
    if latex:
        return "".join(f"Q_{{{2 * j + 1}}}" if 2 * j + 1 >= 10 else f"Q_{2 * j + 1}" for j in range(m + 1))
    return "*".join(f"Q{2 * j + 1}" for j in range(m + 1))


def melham_text(ident: MelhamIdentity, cleared: bool = False, fmt: str = "plain") -> str:
    e = ident.exponent
    poly = ident.cleared_poly if cleared else ident.rational_poly
    if fmt == "latex":
        power = f"^{e}" if e < 10 else f"^{{{e}}}"
        lhs = rf"\sum_{{k=1}}^n P_{{2k}}{power if e > 1 else ''}"
        if cleared:
            lhs = f"{_q_product(ident.m, True)} {lhs}"
        return f"{lhs} = {poly_str(poly, 'P_{2n+1}', latex=True)}"
    lhs = f"{_q_product(ident.m, False)}*S" if cleared else "S"
    term = "P(2k)" if e == 1 else f"P(2k)^{e}"
    legend = f"S = sum_{{k=1}}^{{n}} {term}, X = P(2n+1)"
    return f"{lhs} = {poly_str(poly)} where {legend}"


def _reduction_terms(red: PowerReduction, parity: str | None, latex: bool) -> str:
    parts: list[str] = []
    for t in red.terms:
        if parity is None:
            neg = False
            symbolic = t.j % 2 == 1  # j even: (-1)^{j(n+1)} = 1 for every n
        else:
            neg = red.sign(t.j, 1 if parity == "odd" else 0) < 0
            symbolic = False
        if latex:
            idx = f"P_{{{t.index_multiplier}n}}" if t.index_multiplier > 1 else "P_{n}"
            sign_factor = "(-1)^{n+1}" if symbolic else ""
            body = f"{t.binom if t.binom != 1 else ''}{sign_factor}{idx}"
        else:
            idx = f"P({t.index_multiplier}n)" if t.index_multiplier > 1 else "P(n)"
            factors = [str(t.binom)] if t.binom != 1 else []
            if symbolic:
                factors.append("(-1)^(n+1)")
            body = "*".join(factors + [idx])
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


def power_reduction_text(red: PowerReduction, parity: str | None = None, fmt: str = "plain") -> str:
    """``parity=None`` keeps the (-1)^(n+1) factors symbolic."""
    e = 2 * red.m + 1
    inner = _reduction_terms(red, parity, fmt == "latex")
    if fmt == "latex":
        lhs = f"{{P_n}}^{e}" if e < 10 else f"{{P_n}}^{{{e}}}"
        if e == 1:
            lhs = "P_n"
        rhs = inner if red.scale == 1 else rf"\frac{{1}}{{{red.scale.denominator}}}\left({inner}\right)"
        return f"{lhs} = {rhs}"
    lhs = "P(n)" if e == 1 else f"P(n)^{e}"
    rhs = inner if red.scale == 1 else f"1/{red.scale.denominator}*({inner})"
    suffix = f" where n {parity}" if parity else ""
    return f"{lhs} = {rhs}{suffix}"


def _value_str(c: Any) -> str:
    if isinstance(c, Poly):
        return spoly_str(c)
    return str(c)


def _coeff_list(p: Poly) -> list[dict[str, Any]]:
    return [{"degree": k, "value": _value_str(c)} for k, c in enumerate(p) if c != 0]


def odd_multiple_json(ident: OddMultipleIdentity, parity: str) -> dict[str, Any]:
    return {
        "kind": "general-odd-multiple" if ident.general else "odd-multiple",
        "m": ident.m,
        "variable": ident.variable,
        "parity": parity,
        "coefficients": _coeff_list(ident.pair.for_parity(parity)),
        "multiplier": None,
        "denominator": None,
    }


def melham_json(ident: MelhamIdentity, cleared: bool = False) -> dict[str, Any]:
    """Rational form travels as integer coefficients over one common denominator."""
    if cleared:
        coeffs, mult, den = ident.cleared_poly, str(ident.multiplier), None
    else:
        coeffs, d = clear_denominators(ident.rational_poly)
        mult, den = None, str(d)
    return {
        "kind": "melham",
        "m": ident.m,
        "variable": "P_{2n+1}",
        "parity": None,
        "coefficients": _coeff_list(coeffs),
        "multiplier": mult,
        "denominator": den,
    }


def power_reduction_json(red: PowerReduction, parity: str | None = None) -> dict[str, Any]:
    """``degree`` here is the index multiplier 2m+1-2j of P_{(2m+1-2j)n}.

    With ``parity=None`` the values are unsigned and ``sign_exponent`` names
    the sign rule; with a parity the signs are applied.
    """
    coeffs = []
    for t in red.terms:
        v = t.binom
        if parity is not None:
            v *= red.sign(t.j, 1 if parity == "odd" else 0)
        coeffs.append({"degree": t.index_multiplier, "value": str(v)})
    out: dict[str, Any] = {
        "kind": "power-reduction",
        "m": red.m,
        "variable": "P_n",
        "parity": parity,
        "coefficients": coeffs,
        "multiplier": None,
        "denominator": str(red.scale.denominator),
    }
    if parity is None:
        out["sign_exponent"] = red.sign_rule
    return out


def dump_json(obj: Any) -> str:
    return json.dumps(obj, indent=2)
