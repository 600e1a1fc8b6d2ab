"""Operators with rational-function coefficients in standard form, and truncated jets.

An operator vector is a finite left-linear combination of derivatives
``D^alpha e_i`` with coefficients in F(x).  Products are normal-ordered eagerly
through the commutation rule ``D_j f = f D_j + df/dx_j``, so equal operators
always have equal term maps.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Sequence, Tuple

from .errors import DegreeExceeded, InvalidInput
from .polynomials import Polynomial, RationalFunction
from .scalars import Scalar

MultiIndex = Tuple[int, ...]


@dataclass(frozen=True)
class Derivative:
    """The derivative monomial D^alpha applied to unknown number ``component``."""

    component: int
    alpha: MultiIndex

    @property
    def order(self) -> int:
        return sum(self.alpha)

    def rank_key(self):
        """Standard-ranking key: lex on (|alpha|, component, alpha_1..alpha_{m-1})."""
        return (self.order, self.component, self.alpha[:-1])

    def differentiate(self, gamma: MultiIndex) -> "Derivative":
        return Derivative(self.component, tuple(a + g for a, g in zip(self.alpha, gamma)))

    def divides(self, other: "Derivative") -> bool:
        return self.component == other.component and all(
            a <= b for a, b in zip(self.alpha, other.alpha)
        )


def multi_indices(m: int, max_total: int) -> Iterator[MultiIndex]:
    """All alpha in N^m with |alpha| <= max_total, in increasing total degree."""
    for total in range(max_total + 1):
        for cuts in itertools.combinations(range(total + m - 1), m - 1):
            parts = []
            prev = -1
            for c in cuts:
                parts.append(c - prev - 1)
                prev = c
            parts.append(total + m - 2 - prev)
            yield tuple(parts)


def derivatives_up_to(m: int, n: int, s: int) -> List[Derivative]:
    """The set Delta_s, sorted by the standard ranking."""
    out = [
        Derivative(i, alpha)
        for alpha in multi_indices(m, s)
        for i in range(1, n + 1)
    ]
    out.sort(key=Derivative.rank_key)
    return out


class OperatorVector:
    """An element of B_m(F)^n in standard form."""

    __slots__ = ("terms", "m", "n")

    def __init__(self, terms: Mapping[Derivative, RationalFunction], m: int, n: int):
        self.terms = {d: c for d, c in terms.items() if c}
        self.m = m
        self.n = n

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, m: int, n: int) -> "OperatorVector":
        return cls({}, m, n)

    @classmethod
    def from_derivative(cls, d: Derivative, m: int, n: int, coeff=None) -> "OperatorVector":
        if coeff is None:
            coeff = RationalFunction.constant(1, m)
        return cls({d: coeff}, m, n)

    @classmethod
    def scalar_function(cls, f: RationalFunction, m: int, n: int = 1) -> "OperatorVector":
        return cls({Derivative(1, (0,) * m): f}, m, n)

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, OperatorVector):
            return NotImplemented
        return self.m == other.m and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.m, self.n, frozenset(self.terms.items())))

    def __repr__(self):
        return f"OperatorVector({self.terms!r}, m={self.m}, n={self.n})"

    def degree(self) -> int:
        """Max |alpha| over the support; -1 for the zero operator."""
        if not self.terms:
            return -1
        return max(d.order for d in self.terms)

    def coefficient(self, d: Derivative) -> RationalFunction:
        return self.terms.get(d, RationalFunction.zero(self.m))

    def is_polynomial_row(self) -> bool:
        """True iff every coefficient is a polynomial (element of A_m(F)^n)."""
        return all(c.is_polynomial() for c in self.terms.values())

    def is_scalar(self) -> bool:
        return self.n == 1

    # -- linear structure --------------------------------------------------

    def __add__(self, other: "OperatorVector") -> "OperatorVector":
        if not isinstance(other, OperatorVector):
            return NotImplemented
        terms = dict(self.terms)
        for d, c in other.terms.items():
            s = terms.get(d, RationalFunction.zero(self.m)) + c
            if s:
                terms[d] = s
            else:
                terms.pop(d, None)
        return OperatorVector(terms, self.m, self.n)

    def __neg__(self) -> "OperatorVector":
        return OperatorVector({d: -c for d, c in self.terms.items()}, self.m, self.n)

    def __sub__(self, other: "OperatorVector") -> "OperatorVector":
        if not isinstance(other, OperatorVector):
            return NotImplemented
        return self + (-other)

    def left_scale(self, f: RationalFunction | Polynomial | int) -> "OperatorVector":
        """Multiply on the left by a function (commutes past nothing: pure scaling)."""
        if isinstance(f, (Polynomial, int)):
            f = RationalFunction(f) if isinstance(f, Polynomial) else RationalFunction.constant(f, self.m)
        if not f:
            return OperatorVector.zero(self.m, self.n)
        return OperatorVector({d: f * c for d, c in self.terms.items()}, self.m, self.n)


def apply_single_d(j: int, p: OperatorVector) -> OperatorVector:
    """Standard form of D_j * p via the Leibniz rule D_j (f d) = (df/dx_j) d + f (D_j d)."""
    if not 1 <= j <= p.m:
        raise IndexError(f"derivation index {j} out of range 1..{p.m}")
    shift = tuple(1 if k == j - 1 else 0 for k in range(p.m))
    terms: Dict[Derivative, RationalFunction] = {}
    for d, f in p.terms.items():
        df = f.derivative(j)
        if df:
            s = terms.get(d, RationalFunction.zero(p.m)) + df
            if s:
                terms[d] = s
            else:
                terms.pop(d, None)
        dd = d.differentiate(shift)
        s = terms.get(dd, RationalFunction.zero(p.m)) + f
        if s:
            terms[dd] = s
        else:
            terms.pop(dd, None)
    return OperatorVector(terms, p.m, p.n)


def left_multiply_by_d(beta: MultiIndex, p: OperatorVector) -> OperatorVector:
    """Standard form of D^beta * p."""
    if len(beta) != p.m:
        raise InvalidInput("multi-index length does not match variable count")
    result = p
    for j, e in enumerate(beta, start=1):
        for _ in range(e):
            result = apply_single_d(j, result)
    return result


def scalar_operator_product(h: OperatorVector, p: OperatorVector) -> OperatorVector:
    """Standard form of the left product h * p for a scalar operator h (n = 1)."""
    if h.n != 1:
        raise InvalidInput("left factor must be a scalar operator (n = 1)")
    if h.m != p.m:
        raise InvalidInput("variable counts differ")
    result = OperatorVector.zero(p.m, p.n)
    for d, f in h.terms.items():
        result = result + left_multiply_by_d(d.alpha, p).left_scale(f)
    return result


def coefficient_vector(p: OperatorVector, s: int) -> List[RationalFunction]:
    """The coefficients of p at Delta_s in ranking order, unevaluated."""
    if p.degree() > s:
        raise DegreeExceeded(f"operator degree {p.degree()} exceeds slice order {s}")
    return [p.coefficient(d) for d in derivatives_up_to(p.m, p.n, s)]


def cf_slice(p: OperatorVector, s: int, point: Sequence[Scalar]) -> List[Scalar]:
    """The coefficients of p at Delta_s, evaluated at a point, in ranking order."""
    return [c.evaluate(point) for c in coefficient_vector(p, s)]


# -- jets ------------------------------------------------------------------


class Jet:
    """Derivative values of an n-tuple of formal series at a point, through order T."""

    __slots__ = ("base_point", "order", "m", "n", "values")

    def __init__(self, base_point: Sequence[Scalar], order: int, m: int, n: int,
                 values: Mapping[Derivative, Scalar]):
        self.base_point = tuple(base_point)
        self.order = order
        self.m = m
        self.n = n
        self.values = {d: v for d, v in values.items() if d.order <= order}

    def value(self, d: Derivative) -> Scalar:
        return self.values.get(d, Fraction(0))

    def truncate(self, order: int) -> "Jet":
        return Jet(self.base_point, order, self.m, self.n, self.values)

    def is_zero(self) -> bool:
        return not any(self.values.values())

    def __eq__(self, other):
        if not isinstance(other, Jet):
            return NotImplemented
        if (self.base_point, self.order, self.m, self.n) != (
            other.base_point, other.order, other.m, other.n
        ):
            return False
        keys = set(self.values) | set(other.values)
        return all(self.value(d) == other.value(d) for d in keys)

    def __repr__(self):
        return (f"Jet(base_point={self.base_point!r}, order={self.order}, "
                f"m={self.m}, n={self.n}, values={self.values!r})")


def apply_to_jet(p: OperatorVector, u: Jet) -> Jet:
    """The jet of p[u] at the same base point, exact through order T - deg p."""
    if p.m != u.m or p.n != u.n:
        raise InvalidInput("operator and jet dimensions differ")
    if p.is_zero():
        return Jet(u.base_point, u.order, u.m, 1, {})
    deg = p.degree()
    if u.order < deg:
        raise InvalidInput(
            f"jet order {u.order} below operator degree {deg}: truncation underflow"
        )
    out_order = u.order - deg
    values: Dict[Derivative, Scalar] = {}
    for beta in multi_indices(p.m, out_order):
        shifted = left_multiply_by_d(beta, p)
        total: Scalar = Fraction(0)
        for d, c in shifted.terms.items():
            total = total + c.evaluate(u.base_point) * u.value(d)
        values[Derivative(1, beta)] = total
    return Jet(u.base_point, out_order, u.m, 1, values)
