"""Weyl-closure membership with verifiable witnesses, plus two independent cross-checks.

The primary decision reduces the candidate against a Riquier basis of the
generated F(x)-submodule; a reduction to zero is turned into an exact identity
``w * q = sum_j h_j * p_j`` with polynomial w and cofactors by composing the
reduction trace with the completion cofactors and clearing denominators.  The
cross-checks are F(x)-linear solving on coefficient slices and, for a single
operator in one variable, Euclidean left division.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

from .errors import InvalidInput
from .linalg import solve_linear_combination
from .operators import (
    OperatorVector,
    coefficient_vector,
    left_multiply_by_d,
    multi_indices,
    scalar_operator_product,
)
from .polynomials import Polynomial, RationalFunction, common_denominator
from .ranking import head_of, reduce_full
from .riquier import RiquierBasis, complete_to_riquier_basis


@dataclass
class Witness:
    """A nonzero polynomial w and cofactors h_j with w*q = sum_j h_j * p_j."""

    w: Polynomial
    cofactors: List[OperatorVector]


@dataclass
class MembershipResult:
    member: bool
    witness: Optional[Witness]
    normal_form: OperatorVector
    basis: RiquierBasis


def _validate_polynomial_rows(q: OperatorVector,
                              generators: Sequence[OperatorVector]) -> None:
    if not q.is_polynomial_row():
        raise InvalidInput("candidate has non-polynomial coefficients")
    for j, g in enumerate(generators):
        if not g.is_polynomial_row():
            raise InvalidInput(f"generator {j} has non-polynomial coefficients")
        if (g.m, g.n) != (q.m, q.n):
            raise InvalidInput(f"generator {j} has mismatched dimensions")


def verify_witness(witness: Witness, q: OperatorVector,
                   generators: Sequence[OperatorVector]) -> bool:
    """Check the identity w*q - sum_j h_j * p_j = 0 by direct multiplication."""
    if witness.w.is_zero():
        return False
    if len(witness.cofactors) != len(generators):
        return False
    if not all(h.is_polynomial_row() for h in witness.cofactors):
        return False
    residue = q.left_scale(witness.w)
    for h, g in zip(witness.cofactors, generators):
        residue = residue - scalar_operator_product(h, g)
    return residue.is_zero()


def weyl_closure_member(q: OperatorVector,
                        generators: Sequence[OperatorVector]) -> MembershipResult:
    """Decide q in F(x)N ∩ A_m(F)^n and extract a verified witness when true."""
    _validate_polynomial_rows(q, generators)
    m, n = q.m, q.n
    basis = complete_to_riquier_basis(generators, m, n)
    trace = reduce_full(q, basis.elements)
    if not trace.normal_form.is_zero():
        return MembershipResult(False, None, trace.normal_form, basis)

    # q = sum_k trace.cofactors[k] * basis_k and each basis element is an exact
    # combination of the generators, so compose and clear denominators.
    rational_cofactors: Dict[int, OperatorVector] = {}
    for k, step in trace.cofactors.items():
        for g, c in basis.generator_cofactors[k].items():
            contribution = scalar_operator_product(step, c)
            cur = rational_cofactors.get(g)
            total = contribution if cur is None else cur + contribution
            rational_cofactors[g] = total

    all_coeffs = [
        coeff for h in rational_cofactors.values() for coeff in h.terms.values()
    ]
    w = common_denominator(all_coeffs, m)
    cofactors = [
        rational_cofactors.get(g, OperatorVector.zero(m, 1)).left_scale(w)
        for g in range(len(generators))
    ]
    witness = Witness(w, cofactors)
    if not verify_witness(witness, q, generators):
        raise RuntimeError("internal error: extracted witness failed verification")
    return MembershipResult(True, witness, trace.normal_form, basis)


def lemma1_solve(f: Sequence[RationalFunction],
                 gs: Sequence[Sequence[RationalFunction]]) -> Optional[List[RationalFunction]]:
    """Coefficients h_j over F(x) with f = sum h_j g_j, or None."""
    if gs:
        nvars = gs[0][0].nvars if gs[0] else 0
    elif f:
        nvars = f[0].nvars
    else:
        return []
    zero = RationalFunction.zero(nvars)
    return solve_linear_combination(list(f), [list(g) for g in gs], zero)


def membership_via_lemma1(q: OperatorVector,
                          generators: Sequence[OperatorVector]) -> bool:
    """Independent decision path: F(x)-linear solving on coefficient slices."""
    _validate_polynomial_rows(q, generators)
    if q.is_zero():
        return True
    basis = complete_to_riquier_basis(generators, q.m, q.n)
    if not basis.elements:
        return False  # N = 0 and q is nonzero
    s = max([q.degree()] + [p.degree() for p in basis.elements])
    family = []
    for p in basis.elements:
        for beta in multi_indices(q.m, s - p.degree()):
            family.append(coefficient_vector(left_multiply_by_d(beta, p), s))
    target = coefficient_vector(q, s)
    return lemma1_solve(target, family) is not None


def oracle_division_member_1d(q: OperatorVector, p: OperatorVector) -> bool:
    """Euclidean left-division membership test in B_1(F): valid only for m = n = 1."""
    if q.m != 1 or q.n != 1 or p.m != 1 or p.n != 1:
        raise InvalidInput("Euclidean oracle requires m = n = 1")
    if p.is_zero():
        raise InvalidInput("division by the zero operator")
    p_head = head_of(p)
    remainder = q
    while not remainder.is_zero():
        r_head = head_of(remainder)
        if r_head.degree < p_head.degree:
            return False
        shift = (r_head.degree - p_head.degree,)
        coeff = r_head.coefficient / p_head.coefficient
        step = left_multiply_by_d(shift, p).left_scale(coeff)
        remainder = remainder - step
    return True
