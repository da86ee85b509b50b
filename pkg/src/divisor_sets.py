"""Divisor-value sets S and the S-generalized functions mu_{A,S}, h_{A,S}, phi_{A,S}, c_{A,S,n}."""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from src.config import CACHE_SIZE
from src.errors import InternalInconsistency, SetExcludesOne
from src.numtheory import is_prime, is_square
from src.regular_systems import (
    D,
    RegularSystem,
    a_divisors,
    core_divisors,
    euler_phi_A,
    gcd_A,
    mobius_A,
)

SET_ONE = "one"
SET_NON_ONE = "nonone"
SET_SQUARES = "squares"
SET_PRIMES = "primes"
SET_LIST_PREFIX = "list:"


@dataclass(frozen=True)
class DivisorValueSet:
    name: str
    # part of equality and hash, so memo caches never mix two predicates that share a name
    member: Callable[[int], bool]
    claims_multiplicative: bool = False

    def __contains__(self, n: int) -> bool:
        return self.member(n)

    def rho(self, n: int) -> int:
        return 1 if self.member(n) else 0

    def __str__(self) -> str:
        return self.name


def _is_one(n: int) -> bool:
    return n == 1


def _is_not_one(n: int) -> bool:
    return n != 1


ONE = DivisorValueSet(name=SET_ONE, member=_is_one, claims_multiplicative=True)
NON_ONE = DivisorValueSet(name=SET_NON_ONE, member=_is_not_one)
SQUARES = DivisorValueSet(name=SET_SQUARES, member=is_square, claims_multiplicative=True)
PRIMES = DivisorValueSet(name=SET_PRIMES, member=is_prime)

BUILTIN_SETS: dict[str, DivisorValueSet] = {s.name: s for s in (ONE, NON_ONE, SQUARES, PRIMES)}


@dataclass(frozen=True)
class _ExplicitMembership:
    values: frozenset[int]

    def __call__(self, n: int) -> bool:
        return n in self.values


def explicit_set(values: list[int] | tuple[int, ...]) -> DivisorValueSet:
    if not values:
        raise ValueError("explicit set must be nonempty")
    ordered = list(values)
    if any(v < 1 for v in ordered):
        raise ValueError(f"explicit set must contain positive integers, got {ordered}")
    if ordered != sorted(set(ordered)):
        raise ValueError(f"explicit set must be strictly ascending, got {ordered}")
    name = SET_LIST_PREFIX + ",".join(str(v) for v in ordered)
    return DivisorValueSet(name=name, member=_ExplicitMembership(frozenset(ordered)))


def resolve_set(spec: str) -> DivisorValueSet:
    """Parse `one|nonone|squares|primes|list:<csv>`."""
    value = spec.strip()
    lowered = value.lower()
    if lowered in BUILTIN_SETS:
        return BUILTIN_SETS[lowered]
    if lowered.startswith(SET_LIST_PREFIX):
        raw = value[len(SET_LIST_PREFIX) :]
        try:
            numbers = [int(part) for part in raw.split(",") if part.strip()]
        except ValueError as exc:
            raise ValueError(f"list set must be comma-separated integers, got '{raw}'") from exc
        return explicit_set(numbers)
    raise ValueError(f"Unknown set '{spec}'. Expected one of: {', '.join(BUILTIN_SETS)}, list:<csv>")


def validate_set(S: DivisorValueSet, max_n: int) -> str | None:
    """Spot-check the multiplicativity claim of S up to max_n; returns a description of the first failure."""
    if not S.claims_multiplicative:
        return None
    if not S.member(1):
        return "claims multiplicative but 1 is not a member"
    for m in range(2, max_n + 1):
        for n in range(m + 1, max_n // m + 1):
            if math.gcd(m, n) != 1:
                continue
            if S.rho(m * n) != S.rho(m) * S.rho(n):
                return f"rho_S({m * n}) != rho_S({m}) * rho_S({n})"
    return None


@lru_cache(maxsize=CACHE_SIZE)
def mobius_AS(A: RegularSystem, S: DivisorValueSet, n: int) -> int:
    return sum(mobius_A(A, d) * S.rho(n // d) for d in a_divisors(A, n))


@lru_cache(maxsize=CACHE_SIZE)
def h_AS(A: RegularSystem, S: DivisorValueSet, n: int) -> int:
    """Inverse of mu_{A,S} under A-convolution, by recursion over A(n) in ascending order."""
    if not S.member(1):
        raise SetExcludesOne(f"1 is not in S = {S.name}; mu_{{A,S}}(1) = 0 has no A-convolution inverse")
    if n == 1:
        return 1
    # mu_{A,S}(1) = 1, so h(n) = -sum_{d in A(n), d < n} h(d) mu_{A,S}(n/d).
    return -sum(h_AS(A, S, d) * mobius_AS(A, S, n // d) for d in a_divisors(A, n) if d < n)


def euler_phi_AS(A: RegularSystem, S: DivisorValueSet, n: int) -> int:
    return sum(d * mobius_AS(A, S, n // d) for d in a_divisors(A, n))


def euler_phi_AS_count(A: RegularSystem, S: DivisorValueSet, n: int) -> int:
    return sum(1 for j in range(1, n + 1) if S.member(gcd_A(A, j, n)))


def ramanujan_AS(A: RegularSystem, S: DivisorValueSet, n: int, k: int) -> int:
    """c_{A,S,n}(k) = sum over d in A(n) with d | (k, n)_A of d mu_{A,S}(n/d)."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    g = gcd_A(A, k, n)
    return sum(d * mobius_AS(A, S, n // d) for d in a_divisors(A, n) if g % d == 0)


def ramanujan_classical(n: int, k: int) -> int:
    return ramanujan_AS(D, ONE, n, k)


def ramanujan_A_holder(A: RegularSystem, n: int, k: int) -> int:
    m = n // gcd_A(A, k, n)
    quotient, remainder = divmod(euler_phi_A(A, n) * mobius_A(A, m), euler_phi_A(A, m))
    if remainder != 0:
        raise InternalInconsistency(f"Holder quotient for A={A.name}, n={n}, k={k} is not an integer")
    return quotient


def ramanujan_via_gamma(A: RegularSystem, n: int, k: int) -> int:
    return sum(ramanujan_classical(d, k) for d in core_divisors(A, n))


def hurwitz_sum(A: RegularSystem, S: DivisorValueSet, f: Callable[[Fraction], Fraction | int], n: int):
    """Left side of the generalized Hurwitz lemma: sum of f(j/n) over j <= n with (j,n)_A in S."""
    return sum(f(Fraction(j, n)) for j in range(1, n + 1) if S.member(gcd_A(A, j, n)))


def hurwitz_mobius_side(A: RegularSystem, S: DivisorValueSet, f: Callable[[Fraction], Fraction | int], n: int):
    def full_sum(m: int):
        return sum(f(Fraction(i, m)) for i in range(1, m + 1))

    return sum(mobius_AS(A, S, d) * full_sum(n // d) for d in a_divisors(A, n))

