"""Jet constraints and truncated formal solutions of a Riquier-basis system.

The constraint matrix realizes the truncated equivalence: a tuple of
derivative values at a point extends to a formal solution iff it is
annihilated by every row ``cf(D^beta p)|_{x0}`` with ``|beta| <= s - deg p``.
The formal solver fills in principal-derivative values in ranking order from
the substitution rules, which is the constructive half of that equivalence.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .errors import EvaluationAtPole, InvalidInput, SBelowS0
from .linalg import nullity, nullspace_basis
from .operators import (
    Derivative,
    Jet,
    MultiIndex,
    OperatorVector,
    cf_slice,
    derivatives_up_to,
    left_multiply_by_d,
    multi_indices,
)
from .polynomials import Polynomial
from .ranking import compare_derivatives
from .riquier import DerivativeClass, RiquierBasis
from .scalars import Scalar


@dataclass
class ConstraintSystem:
    """The homogeneous linear system of Prop-style jet constraints at a point."""

    rows: List[List[Scalar]]
    row_labels: List[Tuple[int, MultiIndex]]  # (basis element index, beta)
    columns: List[Derivative]
    s: int
    point: Tuple[Scalar, ...]
    basis: RiquierBasis


def constraint_matrix(basis: RiquierBasis, s: int,
                      point: Sequence[Scalar]) -> ConstraintSystem:
    """All rows cf(D^beta p)|_point over Delta_s, for p in the basis, |beta| <= s - deg p."""
    if s < basis.s0:
        raise SBelowS0(f"requested order {s} is below the basis degree {basis.s0}")
    columns = derivatives_up_to(basis.m, basis.n, s)
    rows: List[List[Scalar]] = []
    labels: List[Tuple[int, MultiIndex]] = []
    for index, p in enumerate(basis.elements):
        # build each D^beta p from a one-step-smaller shift instead of from p
        shifted: Dict[MultiIndex, OperatorVector] = {(0,) * basis.m: p}
        for beta in sorted(multi_indices(basis.m, s - p.degree()),
                           key=lambda b: (sum(b), b)):
            if beta not in shifted:
                j = next(k for k, e in enumerate(beta) if e)
                smaller = beta[:j] + (beta[j] - 1,) + beta[j + 1:]
                shifted[beta] = left_multiply_by_d(
                    tuple(1 if k == j else 0 for k in range(basis.m)),
                    shifted[smaller])
            rows.append(cf_slice(shifted[beta], s, point))
            labels.append((index, beta))
    return ConstraintSystem(rows, labels, columns, s, tuple(point), basis)


def check_jet_constraints(jet: Jet, system: ConstraintSystem) -> bool:
    """True iff every constraint row annihilates the jet."""
    if jet.order != system.s:
        raise InvalidInput(f"jet order {jet.order} does not match system order {system.s}")
    if jet.base_point != system.point:
        raise InvalidInput("jet base point does not match the constraint system")
    vector = [jet.value(d) for d in system.columns]
    for row in system.rows:
        total: Scalar = Fraction(0)
        for a, b in zip(row, vector):
            total = total + a * b
        if total:
            return False
    return True


def formal_solve(basis: RiquierBasis, point: Sequence[Scalar],
                 init: Mapping[Derivative, Scalar], order: int) -> Jet:
    """The unique order-T jet with the given parametric values solving the system.

    Principal-derivative values are computed in increasing ranking order from
    the substitution rule of the basis element whose head divides them.
    Unspecified parametric values default to zero.
    """
    if order < basis.s0:
        raise SBelowS0(f"truncation order {order} is below the basis degree {basis.s0}")
    values: Dict[Derivative, Scalar] = {}
    for d in derivatives_up_to(basis.m, basis.n, order):
        if basis.classify(d) is DerivativeClass.PARAMETRIC:
            values[d] = init.get(d, Fraction(0))
            continue
        row = _evaluated_rule_row(basis, d, tuple(point))
        total: Scalar = Fraction(0)
        for delta, value in row:
            total = total + value * values[delta]
        values[d] = -total  # head coefficient of the shifted rule is 1
    return Jet(point, order, basis.m, basis.n, values)


def _evaluated_rule_row(basis: RiquierBasis, d: Derivative,
                        point: Tuple[Scalar, ...]):
    """Evaluated lower terms of the substitution rule for the principal d.

    Cached on the basis because repeated formal solves at the same point
    (one per nullspace jet, say) would otherwise redo identical rational
    arithmetic.
    """
    cache = getattr(basis, "_rule_row_cache", None)
    if cache is None:
        cache = basis._rule_row_cache = {}
    key = (d, point)
    row = cache.get(key)
    if row is None:
        rule_index = None
        for j, head in enumerate(basis.heads):
            if not head.divides(d):
                continue
            if rule_index is None or compare_derivatives(basis.heads[rule_index], head) < 0:
                rule_index = j
        head = basis.heads[rule_index]
        beta = tuple(a - b for a, b in zip(d.alpha, head.alpha))
        shifted = left_multiply_by_d(beta, basis.elements[rule_index])
        row = [
            (delta, coeff.evaluate(point))
            for delta, coeff in shifted.terms.items()
            if delta != d
        ]
        cache[key] = row
    return row


def solution_space_dim(basis: RiquierBasis, s: int, point: Sequence[Scalar]) -> int:
    """Nullity of the constraint matrix: the number of free jet parameters."""
    system = constraint_matrix(basis, s, point)
    return nullity(system.rows, len(system.columns))


def constraint_nullspace(system: ConstraintSystem) -> List[Jet]:
    """A basis of jets spanning the solutions of the constraint system."""
    vectors = nullspace_basis(system.rows, len(system.columns),
                              Fraction(0), Fraction(1))
    jets = []
    for vec in vectors:
        jets.append(Jet(system.point, system.s, system.basis.m, system.basis.n,
                        dict(zip(system.columns, vec))))
    return jets


def pick_regular_point(avoid: Sequence[Polynomial], m: int,
                       search_radius: int = 25) -> Tuple[Fraction, ...]:
    """First small rational point where none of the given polynomials vanishes."""
    candidates: List[Fraction] = [Fraction(0)]
    for k in range(1, search_radius + 1):
        candidates.append(Fraction(k))
        candidates.append(Fraction(-k))
    for point in itertools.product(candidates, repeat=m):
        if all(p.evaluate(point) for p in avoid if not p.is_zero()):
            return point
    raise EvaluationAtPole("no regular point found in the search range")


def basis_denominators(basis: RiquierBasis) -> List[Polynomial]:
    return [
        coeff.den
        for element in basis.elements
        for coeff in element.terms.values()
    ]
