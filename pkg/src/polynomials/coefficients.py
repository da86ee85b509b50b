"""
Closed formulas and recursions for the coefficients a_{A,S,n}(k) of Phi_{A,S,n}.

Coefficients are indexed ascending: a(0) is the constant term (-1)^rho_S(n).
"""

from __future__ import annotations

import math
from functools import lru_cache

from src.divisor_sets import DivisorValueSet, euler_phi_AS, mobius_AS, ramanujan_AS
from src.errors import InexactDivision, NotPrimitiveProduct, OutOfRange
from src.regular_systems import RegularSystem, a_divisors, euler_phi_A, gcd_A, is_a_divisor, mobius_A


def generalized_binomial(m: int, j: int) -> int:
    """binom(m, j) for any integer m, j >= 0."""
    if m >= 0:
        return math.comb(m, j)
    return (-1) ** j * math.comb(j - m - 1, j)


def coeff_moller_endo(A: RegularSystem, S: DivisorValueSet, n: int, k: int) -> int:
    """a_{A,S,n}(k) from the expansion of (-1)^rho_S(n) prod (1 - x^t)^mu_{A,S}(n/t), t in A(n).

    Sums (-1)^(j_1 + ... + j_k) prod binom(mu_{A,S}(n/t), j_t) over j_1 + 2 j_2 + ... + k j_k = k;
    the exponent of t is zero unless t in A(n), so only those parts are enumerated.
    """
    degree = euler_phi_AS(A, S, n)
    if not 0 <= k <= degree:
        raise OutOfRange(f"k must satisfy 0 <= k <= {degree} for Phi_{{{A.name},{S.name},{n}}}, got {k}")

    parts = [(t, mobius_AS(A, S, n // t)) for t in a_divisors(A, n) if t <= k]
    parts = [(t, e) for t, e in parts if e != 0]

    @lru_cache(maxsize=None)
    def count(index: int, remaining: int) -> int:
        if remaining == 0:
            return 1
        if index == len(parts):
            return 0
        t, e = parts[index]
        total = 0
        for j in range(remaining // t + 1):
            weight = generalized_binomial(e, j)
            if weight:
                total += (-1) ** j * weight * count(index + 1, remaining - j * t)
        return total

    sign = -1 if S.member(n) else 1
    return sign * count(0, k)


def coeffs_moller_endo(A: RegularSystem, S: DivisorValueSet, n: int) -> list[int]:
    return [coeff_moller_endo(A, S, n, k) for k in range(euler_phi_AS(A, S, n) + 1)]


def coeff_recursion(A: RegularSystem, n: int) -> list[int]:
    """All coefficients of Phi_{A,n} for n a product of A-primitive prime powers.

    a(0) = 1 and a(k) = -(mu_A(n)/k) sum_{j=1..k} a(k-j) mu_A((j,n)_A) phi_A((j,n)_A).
    """
    mu = mobius_A(A, n)
    if mu == 0:
        raise NotPrimitiveProduct(f"n = {n} is not a product of {A.name}-primitive prime powers (mu_{A.name}(n) = 0)")
    if n == 1:
        return [-1, 1]

    degree = euler_phi_A(A, n)
    weights = [0] * (degree + 1)
    for j in range(1, degree + 1):
        g = gcd_A(A, j, n)
        weights[j] = mobius_A(A, g) * euler_phi_A(A, g)

    coeffs = [1]
    for k in range(1, degree + 1):
        total = -mu * sum(coeffs[k - j] * weights[j] for j in range(1, k + 1))
        value, remainder = divmod(total, k)
        if remainder:
            raise InexactDivision(f"recursion for Phi_{{{A.name},{n}}} at k = {k}: {total} is not divisible by {k}")
        coeffs.append(value)
    return coeffs


def coeff_newton(A: RegularSystem, S: DivisorValueSet, n: int) -> list[int]:
    """Ascending coefficients from Newton's identities with power sums p_i = c_{A,S,n}(i).

    The elementary symmetric functions b_k of the roots give the coefficient of x^(deg-k):
    b_0 = 1, b_k = -(1/k) sum_{i=1..k} b_{k-i} c_{A,S,n}(i).
    """
    degree = euler_phi_AS(A, S, n)
    power_sums = [0] + [ramanujan_AS(A, S, n, i) for i in range(1, degree + 1)]
    b = [1]
    for k in range(1, degree + 1):
        total = -sum(b[k - i] * power_sums[i] for i in range(1, k + 1))
        value, remainder = divmod(total, k)
        if remainder:
            raise InexactDivision(f"Newton step for Phi_{{{A.name},{S.name},{n}}} at k = {k}: {total} is not divisible by {k}")
        b.append(value)
    return list(reversed(b))


def coeff_first(A: RegularSystem, S: DivisorValueSet, n: int) -> int:
    sign = -1 if S.member(n) else 1
    return -sign * mobius_AS(A, S, n)


def coeff_second(A: RegularSystem, S: DivisorValueSet, n: int) -> int:
    """a(2) = (-1)^rho_S(n) (mu(mu - 1)/2 - mu_{A,S}(n/2)), the last term only when 2 in A(n)."""
    mu = mobius_AS(A, S, n)
    value = mu * (mu - 1) // 2
    if is_a_divisor(A, 2, n):
        value -= mobius_AS(A, S, n // 2)
    return -value if S.member(n) else value


def coeff_subleading(A: RegularSystem, S: DivisorValueSet, n: int) -> int:
    """Coefficient of x^(deg - 1): minus the sum of the roots, -c_{A,S,n}(1)."""
    return -ramanujan_AS(A, S, n, 1)
