"""
Exact class sums of root-of-unity weights over gcd_A classes.

For each d in A(n) the weights of all j in 1..n with (j, n)_A = d (or (j - 1, n)_A = d) are summed
in Z[zeta_m]. Each class sum is a rational integer; that is what turns products with exponents
cos(2 pi j / n) or Re chi(j) into exact products of (x^d - 1)^integer.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass

from src.characters import DirichletCharacter
from src.divisor_sets import DivisorValueSet
from src.errors import NonIntegerClassSum, NonRationalResult
from src.polynomials.cyclotomic_integer import (
    CyclotomicInteger,
    cyclo_int_from_exponents,
    cyclo_int_from_weights,
    cyclo_int_is_integer,
    cyclo_sum,
)
from src.regular_systems import RegularSystem, a_divisors, gcd_A

Weight = Callable[[int], CyclotomicInteger]


@dataclass(frozen=True)
class RootWeight:
    """j -> zeta_m^exponent(j), or 0 where exponent(j) is None."""

    m: int
    exponent: Callable[[int], int | None]

    def __call__(self, j: int) -> CyclotomicInteger:
        r = self.exponent(j)
        return cyclo_int_from_weights(self.m, {} if r is None else {r: 1})


def unit_weight() -> RootWeight:
    return RootWeight(1, lambda _j: 0)


def zeta_weight(n: int) -> RootWeight:
    """j -> zeta_n^j."""
    return RootWeight(n, lambda j: j % n)


def character_weight(chi: DirichletCharacter) -> RootWeight:
    return RootWeight(chi.order(), chi.exponent_at)


def _class_of(A: RegularSystem, n: int, j: int, shift: bool) -> int:
    return gcd_A(A, j - 1 if shift else j, n)


def class_values(A: RegularSystem, n: int, weight: Weight, *, shift: bool = False) -> dict[int, CyclotomicInteger]:
    """Unreduced-to-integer class sums, one CyclotomicInteger per d in A(n)."""
    if isinstance(weight, RootWeight):
        buckets: dict[int, dict[int, int]] = {d: {} for d in a_divisors(A, n)}
        for j in range(1, n + 1):
            r = weight.exponent(j)
            if r is None:
                continue
            bucket = buckets[_class_of(A, n, j, shift)]
            bucket[r] = bucket.get(r, 0) + 1
        return {d: cyclo_int_from_weights(weight.m, bucket) for d, bucket in buckets.items()}

    members: dict[int, list[CyclotomicInteger]] = {d: [] for d in a_divisors(A, n)}
    for j in range(1, n + 1):
        members[_class_of(A, n, j, shift)].append(weight(j))
    return {
        d: cyclo_sum(values, math.lcm(*(v.conductor for v in values))) if values else CyclotomicInteger.zero(1)
        for d, values in members.items()
    }


def class_exponent_sums(A: RegularSystem, n: int, weight: Weight, *, shift: bool = False) -> dict[int, int]:
    """Integer class sums d -> sum of weight(j) over the class of d; raises NonIntegerClassSum otherwise."""
    sums: dict[int, int] = {}
    for d, value in class_values(A, n, weight, shift=shift).items():
        integer = cyclo_int_is_integer(value)
        if integer is None:
            raise NonIntegerClassSum(
                f"class sum for d = {d} (A={A.name}, n={n}, shift={shift}) is {value}, not a rational integer"
            )
        sums[d] = integer
    return sums


def ramanujan_sum_direct(A: RegularSystem, S: DivisorValueSet, n: int, k: int) -> int:
    """c_{A,S,n}(k) as the root-of-unity sum of zeta_n^(jk) over j with (j, n)_A in S, reduced in Z[zeta_n]."""
    value = cyclo_int_from_exponents(n, [j * k for j in range(1, n + 1) if S.member(gcd_A(A, j, n))])
    integer = cyclo_int_is_integer(value)
    if integer is None:
        raise NonRationalResult(f"c_{{{A.name},{S.name},{n}}}({k}) reduced to {value}, not a rational integer")
    return integer
