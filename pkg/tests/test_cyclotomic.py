import sympy

from src.numtheory import divisors
from src.polynomials.cyclotomic import (
    cyclotomic,
    cyclotomic_product,
    inverse_cyclotomic,
    q_classical,
    unitary_cyclotomic,
)
from src.polynomials.intpoly import IntPolynomial, poly_product, x_power_minus_one

x = sympy.Symbol("x")


def sympy_coeffs(expr) -> tuple[int, ...]:
    return tuple(int(c) for c in reversed(sympy.Poly(expr, x).all_coeffs()))


def test_small_cyclotomic_polynomials():
    assert cyclotomic(1) == IntPolynomial((-1, 1))
    assert cyclotomic(12) == IntPolynomial((1, 0, -1, 0, 1))


def test_cyclotomic_matches_sympy():
    for n in list(range(1, 80)) + [105, 165, 210]:
        assert cyclotomic(n).coeffs == sympy_coeffs(sympy.cyclotomic_poly(n, x))


def test_product_over_divisors_is_x_n_minus_1():
    for n in range(1, 301):
        assert poly_product(cyclotomic(d) for d in divisors(n)) == x_power_minus_one(n)


def test_inverse_cyclotomic():
    assert inverse_cyclotomic(1) == IntPolynomial((1,))
    assert inverse_cyclotomic(4) == IntPolynomial((-1, 0, 1))
    for n in range(1, 301):
        assert inverse_cyclotomic(n) * cyclotomic(n) == x_power_minus_one(n)


def test_q_classical():
    assert q_classical(4) == IntPolynomial((-1, 1, -1, 1))
    assert q_classical(4) == cyclotomic_product([1, 4])


def test_unitary_cyclotomic():
    assert unitary_cyclotomic(12) == cyclotomic(6) * cyclotomic(12)
    assert unitary_cyclotomic(7) == cyclotomic(7)
