from fractions import Fraction

import mpmath
import pytest

from src.divisor_sets import NON_ONE, ONE, PRIMES, SQUARES
from src.errors import OutOfRange
from src.polynomials.cyclotomic import cyclotomic
from src.polynomials.generalized import phi_AS
from src.polynomials.intpoly import ONE as ONE_POLY
from src.polynomials.intpoly import X, IntPolynomial
from src.polynomials.oracle import (
    numeric_root_product_oracle,
    oracle_with_deviation,
    poly_eval_mp,
    root_exponents,
)
from src.regular_systems import BUILTIN_SYSTEMS, D, U

SYSTEMS = list(BUILTIN_SYSTEMS.values())
SETS = [ONE, NON_ONE, SQUARES, PRIMES]


def test_oracle_examples():
    assert numeric_root_product_oracle(D, ONE, 12, 128) == cyclotomic(12)
    assert numeric_root_product_oracle(U, ONE, 12, 128) == cyclotomic(6) * cyclotomic(12)
    assert numeric_root_product_oracle(D, ONE, 1, 64) == X - 1
    assert numeric_root_product_oracle(D, NON_ONE, 1, 64) == ONE_POLY


def test_root_exponents():
    assert root_exponents(U, ONE, 12) == [1, 2, 5, 7, 10, 11]
    assert len(root_exponents(D, SQUARES, 4)) == 3


@pytest.mark.parametrize("A", SYSTEMS, ids=lambda A: A.name)
@pytest.mark.parametrize("S", SETS, ids=lambda S: S.name)
def test_oracle_matches_exact_construction(A, S):
    for n in range(1, 41):
        poly, deviation = oracle_with_deviation(A, S, n, 128)
        assert poly == phi_AS(A, S, n)
        assert deviation < 1e-10


@pytest.mark.slow
@pytest.mark.parametrize("A", SYSTEMS, ids=lambda A: A.name)
@pytest.mark.parametrize("S", SETS, ids=lambda S: S.name)
def test_oracle_matches_exact_construction_full_range(A, S):
    for n in range(41, 121):
        poly, deviation = oracle_with_deviation(A, S, n, 128)
        assert poly == phi_AS(A, S, n)
        assert deviation < 1e-10


def test_oracle_range_and_precision_checks():
    with pytest.raises(OutOfRange):
        oracle_with_deviation(D, ONE, 50, 128, max_n=40)
    with pytest.raises(ValueError, match="precision_bits"):
        oracle_with_deviation(D, ONE, 5, 32)


def test_oracle_cap_comes_from_environment(monkeypatch):
    monkeypatch.setenv("CYCLO_ORACLE_MAX_N", "10")
    with pytest.raises(OutOfRange, match="10"):
        numeric_root_product_oracle(D, ONE, 11, 128)


def test_poly_eval_mp():
    p = IntPolynomial((1, -1, 1))
    with mpmath.workprec(128):
        assert poly_eval_mp(p, 2) == 3
        assert poly_eval_mp(p, Fraction(1, 2)) == mpmath.mpf(3) / 4
