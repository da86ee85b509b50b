"""
Generalized cyclotomic polynomials Phi_{A,n} and Phi_{A,S,n}.

Phi_{A,S,n}(x) is the product of (x - zeta_n^j) over 1 <= j <= n with (j, n)_A in S. It is built
along independent routes which must agree:

- R1:  prod over d in A(n) of (x^d - 1)^mu_{A,S}(n/d), resolved by exact division
- R1': (-1)^rho_S(n) prod over d in A(n) of (1 - x^d)^mu_{A,S}(n/d)
- R2:  prod over d in A(n) with n/d in S of Phi_{A,d}
- R3:  the same product with each Phi_{A,d} expanded into classical Phi_e, gamma_A(d) | e | d
"""

from __future__ import annotations

from functools import lru_cache

from src.config import CACHE_SIZE
from src.divisor_sets import ONE, SQUARES, DivisorValueSet, mobius_AS
from src.errors import RouteMismatch
from src.polynomials.cyclotomic import cyclotomic, cyclotomic_product
from src.polynomials.intpoly import (
    IntPolynomial,
    RationalFunctionProduct,
    one_minus_x_power,
    poly_product,
    x_power_minus_one,
)
from src.regular_systems import U, RegularSystem, a_divisors, core_divisors

ROUTE_MOBIUS = "R1"
ROUTE_MOBIUS_REFLECTED = "R1'"
ROUTE_A_PRODUCT = "R2"
ROUTE_CLASSICAL = "R3"


@lru_cache(maxsize=CACHE_SIZE)
def phi_A(A: RegularSystem, n: int) -> IntPolynomial:
    """Phi_{A,n} = prod of Phi_d over d | n with gamma_A(n) | d."""
    return cyclotomic_product(core_divisors(A, n))


def _contributing_divisors(A: RegularSystem, S: DivisorValueSet, n: int) -> list[int]:
    return [d for d in a_divisors(A, n) if S.member(n // d)]


def mobius_product(A: RegularSystem, S: DivisorValueSet, n: int) -> RationalFunctionProduct:
    product = RationalFunctionProduct()
    for d in a_divisors(A, n):
        product = product.times(x_power_minus_one(d), mobius_AS(A, S, n // d))
    return product


def phi_AS_mobius(A: RegularSystem, S: DivisorValueSet, n: int) -> IntPolynomial:
    return mobius_product(A, S, n).resolve()


def phi_AS_reflected(A: RegularSystem, S: DivisorValueSet, n: int) -> IntPolynomial:
    product = RationalFunctionProduct()
    for d in a_divisors(A, n):
        product = product.times(one_minus_x_power(d), mobius_AS(A, S, n // d))
    resolved = product.resolve()
    return -resolved if S.member(n) else resolved


def phi_AS_from_phi_A(A: RegularSystem, S: DivisorValueSet, n: int) -> IntPolynomial:
    return poly_product(phi_A(A, d) for d in _contributing_divisors(A, S, n))


def factor_indices(A: RegularSystem, S: DivisorValueSet, n: int) -> tuple[int, ...]:
    """Multiset of classical indices e with Phi_{A,S,n} = prod Phi_e, ascending."""
    indices: list[int] = []
    for d in _contributing_divisors(A, S, n):
        indices.extend(core_divisors(A, d))
    return tuple(sorted(indices))


def phi_AS_classical(A: RegularSystem, S: DivisorValueSet, n: int) -> IntPolynomial:
    return poly_product(cyclotomic(e) for e in factor_indices(A, S, n))


_ROUTES = {
    ROUTE_MOBIUS: phi_AS_mobius,
    ROUTE_MOBIUS_REFLECTED: phi_AS_reflected,
    ROUTE_A_PRODUCT: phi_AS_from_phi_A,
    ROUTE_CLASSICAL: phi_AS_classical,
}


def phi_AS_routes(A: RegularSystem, S: DivisorValueSet, n: int) -> dict[str, IntPolynomial]:
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    return {route: build(A, S, n) for route, build in _ROUTES.items()}


@lru_cache(maxsize=CACHE_SIZE)
def phi_AS(A: RegularSystem, S: DivisorValueSet, n: int) -> IntPolynomial:
    routes = phi_AS_routes(A, S, n)
    reference = routes[ROUTE_A_PRODUCT]
    for route, poly in routes.items():
        if poly != reference:
            raise RouteMismatch(
                f"Phi_{{{A.name},{S.name},{n}}}: route {route} gives {poly}, route {ROUTE_A_PRODUCT} gives {reference}"
            )
    return reference


def q_star(n: int) -> IntPolynomial:
    """Q*_n: roots zeta_n^j with the unitary gcd (j, n)_* a square."""
    return phi_AS(U, SQUARES, n)


def phi_A_via_mobius(A: RegularSystem, n: int) -> IntPolynomial:
    return phi_AS(A, ONE, n)
