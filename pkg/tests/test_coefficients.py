import pytest

from src.divisor_sets import NON_ONE, ONE, PRIMES, SQUARES, euler_phi_AS, mobius_AS
from src.errors import NotPrimitiveProduct, OutOfRange
from src.polynomials.coefficients import (
    coeff_first,
    coeff_moller_endo,
    coeff_newton,
    coeff_recursion,
    coeff_second,
    coeff_subleading,
    coeffs_moller_endo,
    generalized_binomial,
)
from src.polynomials.cyclotomic import cyclotomic
from src.polynomials.generalized import phi_A, phi_AS
from src.regular_systems import BUILTIN_SYSTEMS, D, U, mobius_A

SYSTEMS = list(BUILTIN_SYSTEMS.values())
SETS = [ONE, NON_ONE, SQUARES, PRIMES]


def test_generalized_binomial():
    assert generalized_binomial(5, 2) == 10
    assert generalized_binomial(2, 3) == 0
    assert [generalized_binomial(-1, j) for j in range(5)] == [1, -1, 1, -1, 1]
    assert generalized_binomial(-2, 2) == 3


@pytest.mark.parametrize("A", SYSTEMS, ids=lambda A: A.name)
@pytest.mark.parametrize("S", SETS, ids=lambda S: S.name)
def test_moller_endo_and_newton_match_construction(A, S):
    for n in range(1, 41):
        coeffs = list(phi_AS(A, S, n).coeffs)
        assert coeffs_moller_endo(A, S, n) == coeffs
        assert coeff_newton(A, S, n) == coeffs


@pytest.mark.slow
@pytest.mark.parametrize("A", SYSTEMS, ids=lambda A: A.name)
@pytest.mark.parametrize("S", SETS, ids=lambda S: S.name)
def test_moller_endo_full_range(A, S):
    for n in range(41, 101):
        assert coeffs_moller_endo(A, S, n) == list(phi_AS(A, S, n).coeffs)


@pytest.mark.parametrize("A", SYSTEMS, ids=lambda A: A.name)
@pytest.mark.parametrize("S", SETS, ids=lambda S: S.name)
def test_closed_form_coefficients(A, S):
    for n in range(1, 200):
        poly = phi_AS(A, S, n)
        sign = -1 if S.member(n) else 1
        assert poly.coefficient(0) == sign
        assert poly.coefficient(1) == coeff_first(A, S, n) == -sign * mobius_AS(A, S, n)
        assert poly.coefficient(2) == coeff_second(A, S, n)
        if poly.degree() >= 1:
            assert poly.coefficient(poly.degree() - 1) == coeff_subleading(A, S, n)


def test_moller_endo_rejects_k_outside_degree():
    degree = euler_phi_AS(D, ONE, 12)
    assert coeff_moller_endo(D, ONE, 12, degree) == 1
    with pytest.raises(OutOfRange):
        coeff_moller_endo(D, ONE, 12, degree + 1)


def test_recursion_examples():
    assert coeff_recursion(D, 6) == [1, -1, 1]
    assert coeff_recursion(U, 12) == list((cyclotomic(6) * cyclotomic(12)).coeffs)
    assert coeff_recursion(D, 1) == [-1, 1]
    with pytest.raises(NotPrimitiveProduct):
        coeff_recursion(D, 4)


@pytest.mark.parametrize("A", SYSTEMS, ids=lambda A: A.name)
def test_recursion_on_primitive_products(A):
    for n in range(1, 201):
        if mobius_A(A, n) == 0:
            continue
        assert coeff_recursion(A, n) == list(phi_A(A, n).coeffs)


def test_recursion_holds_for_every_n_when_unitary():
    assert all(mobius_A(U, n) != 0 for n in range(1, 201))
