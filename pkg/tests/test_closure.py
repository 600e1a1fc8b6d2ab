"""Membership decisions, witness verification and the independent cross-checks."""

from fractions import Fraction

import pytest

from weylclosure import (
    InvalidInput,
    OperatorVector,
    RationalFunction,
    Witness,
    lemma1_solve,
    membership_via_lemma1,
    oracle_division_member_1d,
    parse_operator,
    parse_rational,
    scalar_operator_product,
    verify_witness,
    weyl_closure_member,
)
from conftest import random_operator, random_generators


def op(text, m=1, n=1):
    return parse_operator(text, m, n)


def rat(text, m=1):
    return parse_rational(text, m)


def combine(cofactors, generators):
    total = OperatorVector.zero(generators[0].m, generators[0].n)
    for h, g in zip(cofactors, generators):
        total = total + scalar_operator_product(h, g)
    return total


# -- worked membership examples --------------------------------------------

def test_d3_is_in_closure_of_euler_type_operator():
    result = weyl_closure_member(op("D^3"), [op("x^2*D^2 - 2*x*D + 2")])
    assert result.member
    assert result.witness.w == rat("x^2").num
    assert result.witness.cofactors == [op("D")]


def test_half_integer_euler_operator_excludes_d2():
    # x^2*D^2 - x*D + 3/4 only annihilates sqrt(x) and x*sqrt(x), which are
    # not power series; D^2 stays outside the closure.
    gens = [op("x^2*D^2 - x*D + 3/4")]
    result = weyl_closure_member(op("D^2"), gens)
    assert not result.member
    assert not membership_via_lemma1(op("D^2"), gens)


def test_d_plus_x_not_in_closure_of_its_left_multiple():
    q = op("D + x")
    p = op("(-D + x)*(D + x)")
    result = weyl_closure_member(q, [p])
    assert not result.member
    assert result.witness is None
    assert not result.normal_form.is_zero()
    assert not membership_via_lemma1(q, [p])
    assert not oracle_division_member_1d(q, p)


def test_generators_belong_with_trivial_witness():
    gens = [op("D1 + x2*D2", 2), op("x1*D2^2", 2)]
    for j, g in enumerate(gens):
        result = weyl_closure_member(g, gens)
        assert result.member
        assert combine(result.witness.cofactors, gens) == g.left_scale(result.witness.w)


def test_zero_candidate_is_always_a_member():
    result = weyl_closure_member(op("0"), [op("D^2 + x")])
    assert result.member
    assert result.witness.w == rat("1").num


def test_nonzero_candidate_against_empty_system():
    result = weyl_closure_member(op("D"), [op("0")])
    assert not result.member


def test_vector_candidate_membership():
    gens = [op("D [u1]", 1, 2), op("1 [u2]", 1, 2)]
    result = weyl_closure_member(op("D^2 [u1] + x [u2]", 1, 2), gens)
    assert result.member
    assert verify_witness(result.witness, op("D^2 [u1] + x [u2]", 1, 2), gens)


def test_rational_coefficients_are_rejected():
    with pytest.raises(InvalidInput):
        weyl_closure_member(op("(1/x)*D"), [op("D")])
    with pytest.raises(InvalidInput):
        weyl_closure_member(op("D"), [op("(1/x)*D")])


# -- witness verification --------------------------------------------------

def test_verify_witness_rejects_zero_w():
    gens = [op("D")]
    assert not verify_witness(Witness(rat("0").num, [op("1")]), op("D"), gens)


def test_verify_witness_rejects_wrong_cofactor_count():
    gens = [op("D"), op("x")]
    assert not verify_witness(Witness(rat("1").num, [op("1")]), op("D"), gens)


def test_verify_witness_rejects_wrong_identity():
    gens = [op("D")]
    assert not verify_witness(Witness(rat("1").num, [op("x")]), op("D"), gens)


def test_verify_witness_accepts_hand_built_identity():
    # x^2 * D^3 = D * (x^2*D^2 - 2*x*D + 2)
    gens = [op("x^2*D^2 - 2*x*D + 2")]
    assert verify_witness(Witness(rat("x^2").num, [op("D")]), op("D^3"), gens)


# -- the F(x)-linear solver ------------------------------------------------

def test_lemma1_solve_single_relation():
    f = [rat("x"), rat("1")]
    gs = [[rat("x^2"), rat("x")]]
    assert lemma1_solve(f, gs) == [rat("1/x")]


def test_lemma1_solve_inconsistent():
    assert lemma1_solve([rat("1"), rat("0")], [[rat("0"), rat("1")]]) is None


def test_lemma1_solve_empty_family():
    assert lemma1_solve([], []) == []
    assert lemma1_solve([rat("x")], []) is None


def test_lemma1_reconstructs_solution(rng):
    for _ in range(10):
        gs = [[rat(f"{rng.randint(-3, 3)}") + rat("x") * RationalFunction.constant(k, 1)
               for k in range(3)] for _ in range(2)]
        coeffs = [rat("x"), rat("1/(x + 1)")]
        f = [sum((c * g[k] for c, g in zip(coeffs, gs)),
                 RationalFunction.zero(1)) for k in range(3)]
        sol = lemma1_solve(f, gs)
        assert sol is not None
        for k in range(3):
            total = sum((c * g[k] for c, g in zip(sol, gs)), RationalFunction.zero(1))
            assert total == f[k]


# -- Euclidean left-division oracle ----------------------------------------

def test_oracle_division_exact_left_multiple():
    p = op("x^2*D^2 - 2*x*D + 2")
    assert oracle_division_member_1d(scalar_operator_product(op("D + x"), p), p)


def test_oracle_division_degree_too_small():
    assert not oracle_division_member_1d(op("D"), op("D^2"))


def test_oracle_division_rejects_higher_dimension():
    with pytest.raises(InvalidInput):
        oracle_division_member_1d(op("D1", 2), op("D2", 2))


def test_oracle_division_by_zero():
    with pytest.raises(InvalidInput):
        oracle_division_member_1d(op("D"), op("0"))


# -- structural properties -------------------------------------------------

def test_closure_is_a_left_module(rng):
    # if q is a member then so is a*q for any polynomial-coefficient operator a
    gens = [op("x^2*D^2 - 2*x*D + 2")]
    q = op("D^3")
    for _ in range(8):
        a = random_operator(rng, 1, 1, order=2, degree=2, terms=2,
                            polynomial_coeffs=True)
        result = weyl_closure_member(scalar_operator_product(a, q), gens)
        assert result.member


def test_membership_paths_agree_randomized(rng):
    for _ in range(12):
        m = rng.randint(1, 2)
        n = rng.randint(1, 2)
        gens = random_generators(rng, m, n, rng.randint(1, 2), order=2, degree=1,
                                 polynomial_coeffs=True)
        q = random_operator(rng, m, n, order=2, degree=1, polynomial_coeffs=True)
        result = weyl_closure_member(q, gens)
        assert result.member == membership_via_lemma1(q, gens)
        if result.member:
            assert verify_witness(result.witness, q, gens)
