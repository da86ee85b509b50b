"""Exact elements of Z[zeta_m], stored as residues modulo Phi_m.

Sums of roots of unity (Ramanujan sums, character sums, class sums) are built here and
reduced once; a value is rational exactly when its reduced residue has degree <= 0.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from src.numtheory import euler_phi
from src.polynomials.cyclotomic import cyclotomic
from src.polynomials.intpoly import IntPolynomial, poly_divmod, poly_mul


def _reduce(m: int, coeffs_mod_m: list[int]) -> IntPolynomial:
    _, remainder = poly_divmod(IntPolynomial(tuple(coeffs_mod_m)), cyclotomic(m))
    return remainder


@dataclass(frozen=True)
class CyclotomicInteger:
    conductor: int
    residue: IntPolynomial

    def __post_init__(self) -> None:
        if self.conductor < 1:
            raise ValueError(f"conductor must be >= 1, got {self.conductor}")
        if self.residue.degree() >= euler_phi(self.conductor):
            raise ValueError(f"residue of degree {self.residue.degree()} is not reduced modulo Phi_{self.conductor}")

    @classmethod
    def zero(cls, m: int) -> CyclotomicInteger:
        return cls(m, IntPolynomial(()))

    @classmethod
    def integer(cls, m: int, value: int) -> CyclotomicInteger:
        return cls(m, IntPolynomial((value,)))

    @classmethod
    def root_of_unity(cls, m: int, exponent: int) -> CyclotomicInteger:
        return cyclo_int_from_exponents(m, (exponent,))

    def _check_same_field(self, other: CyclotomicInteger) -> None:
        if other.conductor != self.conductor:
            raise ValueError(f"conductor mismatch: {self.conductor} vs {other.conductor}; lift one side first")

    def __add__(self, other: CyclotomicInteger) -> CyclotomicInteger:
        self._check_same_field(other)
        return CyclotomicInteger(self.conductor, self.residue + other.residue)

    def __neg__(self) -> CyclotomicInteger:
        return CyclotomicInteger(self.conductor, -self.residue)

    def __sub__(self, other: CyclotomicInteger) -> CyclotomicInteger:
        return self + (-other)

    def __mul__(self, other: CyclotomicInteger | int) -> CyclotomicInteger:
        if isinstance(other, int):
            return CyclotomicInteger(self.conductor, self.residue * other)
        self._check_same_field(other)
        _, remainder = poly_divmod(poly_mul(self.residue, other.residue), cyclotomic(self.conductor))
        return CyclotomicInteger(self.conductor, remainder)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.residue.is_zero()

    def lift(self, multiple: int) -> CyclotomicInteger:
        """Embed Z[zeta_m] into Z[zeta_M] for m | M via zeta_m = zeta_M^(M/m)."""
        if multiple % self.conductor != 0:
            raise ValueError(f"{multiple} is not a multiple of the conductor {self.conductor}")
        step = multiple // self.conductor
        weights: dict[int, int] = {}
        for i, c in enumerate(self.residue.coeffs):
            if c:
                weights[(i * step) % multiple] = weights.get((i * step) % multiple, 0) + c
        return cyclo_int_from_weights(multiple, weights)

    def conjugate(self) -> CyclotomicInteger:
        """Image under zeta -> zeta^-1 (complex conjugation)."""
        m = self.conductor
        weights: dict[int, int] = {}
        for i, c in enumerate(self.residue.coeffs):
            if c:
                weights[(-i) % m] = weights.get((-i) % m, 0) + c
        return cyclo_int_from_weights(m, weights)

    def __str__(self) -> str:
        value = cyclo_int_is_integer(self)
        if value is not None:
            return str(value)
        return f"{self.residue.__str__().replace('x', f'z{self.conductor}')}"


def cyclo_int_from_weights(m: int, weights: Mapping[int, int]) -> CyclotomicInteger:
    """sum of c * zeta_m^r over the (r, c) pairs, reduced modulo Phi_m."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    coeffs = [0] * m
    for r, c in weights.items():
        coeffs[r % m] += c
    return CyclotomicInteger(m, _reduce(m, coeffs))


def cyclo_int_from_exponents(m: int, residues: Iterable[int]) -> CyclotomicInteger:
    """sum of zeta_m^r over a multiset of residues."""
    coeffs = [0] * m
    for r in residues:
        coeffs[r % m] += 1
    return CyclotomicInteger(m, _reduce(m, coeffs))


def cyclo_int_is_integer(z: CyclotomicInteger) -> int | None:
    if z.residue.degree() <= 0:
        return z.residue.coefficient(0)
    return None


def cyclo_sum(values: Iterable[CyclotomicInteger], m: int) -> CyclotomicInteger:
    """Sum in Z[zeta_m]; values of smaller conductor dividing m are lifted first."""
    total = CyclotomicInteger.zero(m)
    for value in values:
        total = total + (value if value.conductor == m else value.lift(m))
    return total
