"""
Numeric brute-force oracle for Phi_{A,S,n}.

Expands prod (x - zeta_n^j) over 1 <= j <= n with (j, n)_A in S in mpmath complex arithmetic and
rounds each coefficient. The expansion runs with extra guard bits so the rounding tolerance
2^-(precision_bits/4) only has to absorb the accuracy requested by the caller.
"""

from __future__ import annotations

import logging
from fractions import Fraction

import mpmath

from src.config import load_settings
from src.divisor_sets import DivisorValueSet
from src.errors import OutOfRange, PrecisionExhausted
from src.polynomials.intpoly import IntPolynomial
from src.regular_systems import RegularSystem, gcd_A

logger = logging.getLogger("cyclo:oracle")

MIN_PRECISION_BITS = 64
GUARD_BITS = 32


def root_exponents(A: RegularSystem, S: DivisorValueSet, n: int) -> list[int]:
    return [j for j in range(1, n + 1) if S.member(gcd_A(A, j, n))]


def _expand_roots(roots: list[mpmath.mpc]) -> list[mpmath.mpc]:
    # Ascending coefficients of prod (x - r).
    coeffs = [mpmath.mpc(1)]
    for r in roots:
        shifted = [mpmath.mpc(0)] + coeffs
        for i, c in enumerate(coeffs):
            shifted[i] -= r * c
        coeffs = shifted
    return coeffs


def oracle_with_deviation(
    A: RegularSystem,
    S: DivisorValueSet,
    n: int,
    precision_bits: int,
    *,
    max_n: int | None = None,
) -> tuple[IntPolynomial, float]:
    """Return the rounded polynomial and the largest distance of a computed coefficient from its integer."""
    limit = load_settings().oracle_max_n if max_n is None else max_n
    if n < 1 or n > limit:
        raise OutOfRange(f"numeric oracle accepts 1 <= n <= {limit}, got {n}")
    if precision_bits < MIN_PRECISION_BITS:
        raise ValueError(f"precision_bits must be >= {MIN_PRECISION_BITS}, got {precision_bits}")

    tolerance = mpmath.mpf(2) ** (-(precision_bits // 4))
    exponents = root_exponents(A, S, n)
    with mpmath.workprec(precision_bits + n + GUARD_BITS):
        units = mpmath.unitroots(n)
        # unitroots(n)[k] = exp(2 pi i k / n), so j = n sits at index 0.
        coeffs = _expand_roots([units[j % n] for j in exponents])
        rounded: list[int] = []
        worst = mpmath.mpf(0)
        for k, c in enumerate(coeffs):
            nearest = int(mpmath.nint(c.real))
            deviation = max(abs(c.real - nearest), abs(c.imag))
            if deviation > tolerance:
                raise PrecisionExhausted(
                    f"coefficient {k} of Phi_{{{A.name},{S.name},{n}}} is {mpmath.nstr(c, 20)}, "
                    f"{mpmath.nstr(deviation, 5)} away from an integer at {precision_bits} bits"
                )
            worst = max(worst, deviation)
            rounded.append(nearest)
    logger.debug("oracle A=%s S=%s n=%s max deviation %s", A.name, S.name, n, mpmath.nstr(worst, 5))
    return IntPolynomial(tuple(rounded)), float(worst)


def numeric_root_product_oracle(
    A: RegularSystem,
    S: DivisorValueSet,
    n: int,
    precision_bits: int,
    *,
    max_n: int | None = None,
) -> IntPolynomial:
    poly, _ = oracle_with_deviation(A, S, n, precision_bits, max_n=max_n)
    return poly


def poly_eval_mp(p: IntPolynomial, x: Fraction | int | mpmath.mpf) -> mpmath.mpf:
    """Horner evaluation at the current mpmath precision."""
    point = mpmath.mpf(x.numerator) / x.denominator if isinstance(x, Fraction) else mpmath.mpf(x)
    value = mpmath.mpf(0)
    for c in reversed(p.coeffs):
        value = value * point + c
    return value
