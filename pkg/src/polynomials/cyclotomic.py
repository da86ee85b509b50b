"""Classical cyclotomic polynomials Phi_n, their inverses Psi_n, and the square and unitary variants Q_n, Phi*_n."""

from __future__ import annotations

import math
from functools import lru_cache

from src.config import CACHE_SIZE
from src.numtheory import divisors, liouville, mobius_unitary
from src.polynomials.intpoly import (
    IntPolynomial,
    RationalFunctionProduct,
    poly_exact_div,
    poly_product,
    x_power_minus_one,
)


@lru_cache(maxsize=CACHE_SIZE)
def cyclotomic(n: int) -> IntPolynomial:
    """Phi_n = (x^n - 1) divided in turn by every Phi_d with d | n, d < n."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    result = x_power_minus_one(n)
    for d in divisors(n)[:-1]:
        result = poly_exact_div(result, cyclotomic(d))
    return result


def inverse_cyclotomic(n: int) -> IntPolynomial:
    """Psi_n = prod over proper divisors d of Phi_d."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    return poly_product(cyclotomic(d) for d in divisors(n)[:-1])


def cyclotomic_product(indices: list[int] | tuple[int, ...]) -> IntPolynomial:
    return poly_product(cyclotomic(e) for e in indices)


def _mobius_product(pairs: list[tuple[int, int]]) -> IntPolynomial:
    product = RationalFunctionProduct()
    for d, exponent in pairs:
        product = product.times(x_power_minus_one(d), exponent)
    return product.resolve()


def q_classical(n: int) -> IntPolynomial:
    """Q_n, the roots zeta_n^j with gcd(j, n) a square: prod over d | n of (x^d - 1)^lambda(n/d)."""
    return _mobius_product([(d, liouville(n // d)) for d in divisors(n)])


def unitary_cyclotomic(n: int) -> IntPolynomial:
    """Phi*_n: prod over unitary divisors d || n of (x^d - 1)^mu*(n/d)."""
    return _mobius_product([(d, mobius_unitary(n // d)) for d in divisors(n) if math.gcd(d, n // d) == 1])
