"""Canonical text rendering of scalars, polynomials, rational functions and operators.

The printer is the inverse of the parser: ``parse(format(p)) == p`` holds
structurally.  Operator terms are emitted in decreasing ranking order with
coefficients parenthesized whenever they are not a single product-safe term.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List

from .operators import Derivative, OperatorVector
from .polynomials import Polynomial, RationalFunction, _grlex_key
from .scalars import GaussianRational, Scalar


def format_scalar(value: Scalar) -> str:
    """Plain rendering: '5', '-3/2', 'i', '2*i', '1 + 2*i'."""
    if isinstance(value, GaussianRational):
        if value.im == 0:
            return str(value.re)
        if value.re == 0:
            if value.im == 1:
                return "i"
            if value.im == -1:
                return "-i"
            return f"{value.im}*i"
        im = format_scalar(GaussianRational(0, value.im))
        if im.startswith("-"):
            return f"{value.re} - {im[1:]}"
        return f"{value.re} + {im}"
    return str(value)


def _scalar_is_simple(value: Scalar) -> bool:
    """True when the scalar renders as a single factor (usable inside a product)."""
    if isinstance(value, GaussianRational):
        return value.im == 0 or value.re == 0
    return True


def _variable_name(index: int, m: int) -> str:
    return "x" if m == 1 else f"x{index}"


def _derivation_name(index: int, m: int) -> str:
    return "D" if m == 1 else f"D{index}"


def _monomial_factors(mono, m: int, name) -> List[str]:
    parts = []
    for j, e in enumerate(mono, start=1):
        if e == 0:
            continue
        base = name(j, m)
        parts.append(base if e == 1 else f"{base}^{e}")
    return parts


def format_polynomial(p: Polynomial) -> str:
    """Terms in decreasing graded-lex order, like 'x^2 - 2*x + 2'."""
    if p.is_zero():
        return "0"
    pieces = []
    for mono in sorted(p.terms, key=_grlex_key, reverse=True):
        coeff = p.terms[mono]
        factors = _monomial_factors(mono, p.nvars, _variable_name)
        cstr = format_scalar(coeff)
        if not factors:
            term = cstr if _scalar_is_simple(coeff) else f"({cstr})"
        elif coeff == 1:
            term = "*".join(factors)
        elif coeff == -1:
            term = "-" + "*".join(factors)
        elif _scalar_is_simple(coeff):
            term = "*".join([cstr] + factors)
        else:
            term = "*".join([f"({cstr})"] + factors)
        pieces.append(term)
    return _join_signed(pieces)


def _join_signed(pieces: List[str]) -> str:
    out = pieces[0]
    for piece in pieces[1:]:
        if piece.startswith("-"):
            out += " - " + piece[1:]
        else:
            out += " + " + piece
    return out


def _poly_is_single_term(p: Polynomial) -> bool:
    return len(p.terms) == 1 and _scalar_is_simple(next(iter(p.terms.values())))


def format_rational(r: RationalFunction) -> str:
    if r.is_polynomial():
        return format_polynomial(r.num)
    num = format_polynomial(r.num)
    den = format_polynomial(r.den)
    if not _poly_is_single_term(r.num) or num.startswith("-"):
        num = f"({num})"
    # A product in the denominator would rebind as ((num/den1)*den2): parenthesize.
    if not _poly_is_single_term(r.den) or "*" in den:
        den = f"({den})"
    return f"{num}/{den}"


def _scalar_is_negative(value: Scalar) -> bool:
    if isinstance(value, GaussianRational):
        return (value.im == 0 and value.re < 0) or (value.re == 0 and value.im < 0)
    return value < 0


def _format_coefficient(coeff: RationalFunction, has_derivative: bool) -> str:
    """Coefficient text ready to prefix a derivative monomial with '*'."""
    if has_derivative:
        if coeff == 1:
            return ""
        if coeff == -1:
            return "-"
    num_single = _poly_is_single_term(coeff.num)
    if num_single and _scalar_is_negative(next(iter(coeff.num.terms.values()))):
        return "-" + _format_coefficient(-coeff, has_derivative)
    if coeff.is_polynomial():
        text = format_polynomial(coeff.num)
        if len(coeff.num.terms) > 1:
            text = f"({text})"
        return text + ("*" if has_derivative else "")
    text = format_rational(coeff)
    if has_derivative or not (num_single and _poly_is_single_term(coeff.den)):
        return f"({text})" + ("*" if has_derivative else "")
    return text


def _format_scalar_terms(p: OperatorVector, component: int) -> str:
    """Render the component slice of p as a scalar operator expression."""
    terms = {d: c for d, c in p.terms.items() if d.component == component}
    if not terms:
        return "0"
    pieces = []
    for d in sorted(terms, key=Derivative.rank_key, reverse=True):
        coeff = terms[d]
        dparts = _monomial_factors(d.alpha, p.m, _derivation_name)
        prefix = _format_coefficient(coeff, bool(dparts))
        if dparts:
            term = prefix + "*".join(dparts)
        else:
            term = prefix
        pieces.append(term)
    return _join_signed(pieces)


def format_operator(p: OperatorVector) -> str:
    """Canonical text for an operator vector; component tags [u#] when n > 1."""
    if p.is_zero():
        return "0"
    if p.n == 1:
        return _format_scalar_terms(p, 1)
    pieces = []
    for component in range(1, p.n + 1):
        if not any(d.component == component for d in p.terms):
            continue
        body = _format_scalar_terms(p, component)
        if " + " in body or " - " in body:
            body = f"({body})"
        pieces.append(f"{body} [u{component}]")
    return _join_signed(pieces)
