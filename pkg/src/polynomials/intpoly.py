"""
Dense integer polynomials.

Coefficients are stored ascending by degree, so 1 - 2x + x^3 is `IntPolynomial((1, -2, 0, 1))`.
The zero polynomial has no coefficients. Multiplication and division only walk the nonzero
terms of the sparser operand, which keeps products of binomials x^d - 1 linear in the degree.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from src.errors import InexactDivision
from src.utils.poly_display import format_polynomial


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coeffs)
        end = len(coeffs)
        while end and coeffs[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", coeffs[:end])

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> IntPolynomial:
        return cls((0,) * degree + (c,))

    def degree(self) -> int:
        """The zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def reversed(self) -> IntPolynomial:
        """x^deg * p(1/x)."""
        return IntPolynomial(tuple(reversed(self.coeffs)))

    def __add__(self, other: IntPolynomial | int) -> IntPolynomial:
        b = (other,) if isinstance(other, int) else other.coeffs
        a = self.coeffs
        size = max(len(a), len(b))
        return IntPolynomial(tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size)))

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPolynomial | int) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPolynomial:
        if k < 0:
            raise ValueError("Cannot raise a polynomial to a negative power; use RationalFunctionProduct.")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = poly_mul(result, base)
            k >>= 1
            if k:
                base = poly_mul(base, base)
        return result

    def __str__(self) -> str:
        return format_polynomial(self.coeffs)


ZERO = IntPolynomial(())
ONE = IntPolynomial((1,))
X = IntPolynomial((0, 1))


def _nonzero_terms(coeffs: Sequence[int]) -> list[tuple[int, int]]:
    return [(i, c) for i, c in enumerate(coeffs) if c]


def poly_mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    if p.is_zero() or q.is_zero():
        return ZERO
    terms_p = _nonzero_terms(p.coeffs)
    terms_q = _nonzero_terms(q.coeffs)
    if len(terms_p) < len(terms_q):
        terms_p, terms_q = terms_q, terms_p
    result = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for j, d in terms_q:
        for i, c in terms_p:
            result[i + j] += c * d
    return IntPolynomial(tuple(result))


def poly_product(factors: Iterable[IntPolynomial]) -> IntPolynomial:
    result = ONE
    for factor in factors:
        result = poly_mul(result, factor)
    return result


def poly_divmod(p: IntPolynomial, q: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
    """Division in Z[x]; raises InexactDivision when a quotient coefficient is not an integer."""
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if p.degree() < q.degree():
        return ZERO, p

    remainder = list(p.coeffs)
    lead = q.leading()
    dq = q.degree()
    terms_q = _nonzero_terms(q.coeffs)
    quotient = [0] * (p.degree() - dq + 1)
    for k in range(p.degree() - dq, -1, -1):
        c = remainder[k + dq]
        if c == 0:
            continue
        t, rem = divmod(c, lead)
        if rem:
            raise InexactDivision(f"leading coefficient {c} is not divisible by {lead} at degree {k + dq}")
        quotient[k] = t
        for j, d in terms_q:
            remainder[k + j] -= t * d
    return IntPolynomial(tuple(quotient)), IntPolynomial(tuple(remainder[:dq]))


def poly_exact_div(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    quotient, remainder = poly_divmod(p, q)
    if not remainder.is_zero():
        raise InexactDivision(f"({p}) is not divisible by ({q}); remainder {remainder}", remainder.coeffs)
    return quotient


def poly_compose_power(p: IntPolynomial, k: int) -> IntPolynomial:
    """p(x^k)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if p.is_zero():
        return ZERO
    result = [0] * (p.degree() * k + 1)
    for i, c in enumerate(p.coeffs):
        result[i * k] = c
    return IntPolynomial(tuple(result))


def poly_eval_int(p: IntPolynomial, x: int) -> int:
    value = 0
    for c in reversed(p.coeffs):
        value = value * x + c
    return value


def x_power_minus_one(d: int) -> IntPolynomial:
    """x^d - 1."""
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    return IntPolynomial((-1,) + (0,) * (d - 1) + (1,))


def one_minus_x_power(d: int) -> IntPolynomial:
    """1 - x^d."""
    return -x_power_minus_one(d)


@dataclass(frozen=True)
class RationalFunctionProduct:
    """Symbolic product of base^exponent with signed integer exponents."""

    factors: tuple[tuple[IntPolynomial, int], ...] = ()

    def times(self, base: IntPolynomial, exponent: int) -> RationalFunctionProduct:
        if exponent == 0:
            return self
        return RationalFunctionProduct(self.factors + ((base, exponent),))

    def numerator(self) -> IntPolynomial:
        return poly_product(base**e for base, e in self.factors if e > 0)

    def resolve(self) -> IntPolynomial:
        """Multiply every positive-exponent factor, then exact-divide by the negative ones in order."""
        result = self.numerator()
        for base, e in self.factors:
            for _ in range(-e):
                result = poly_exact_div(result, base)
        return result
