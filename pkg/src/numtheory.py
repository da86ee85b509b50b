"""Elementary exact number theory: factorization, divisors, classical multiplicative functions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from src.config import CACHE_SIZE

# 2, 3, 5 handled up front; remaining candidates follow the mod-30 wheel.
_WHEEL_PRIMES = (2, 3, 5)
_WHEEL_STEPS = (4, 2, 4, 2, 4, 6, 2, 6)
FACTORIZATION_LIMIT = 10**7


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(a for _, a in self.factors)


def _require_positive(n: int, what: str = "n") -> None:
    if n < 1:
        raise ValueError(f"{what} must be a positive integer, got {n}")


@lru_cache(maxsize=CACHE_SIZE)
def factorize(n: int) -> Factorization:
    _require_positive(n)
    if n > FACTORIZATION_LIMIT:
        raise ValueError(f"factorize targets n <= {FACTORIZATION_LIMIT}, got {n}")

    factors: list[tuple[int, int]] = []
    m = n
    for p in _WHEEL_PRIMES:
        if m % p == 0:
            a = 0
            while m % p == 0:
                m //= p
                a += 1
            factors.append((p, a))

    p = 7
    step = 0
    while p * p <= m:
        if m % p == 0:
            a = 0
            while m % p == 0:
                m //= p
                a += 1
            factors.append((p, a))
        p += _WHEEL_STEPS[step]
        step = (step + 1) % len(_WHEEL_STEPS)
    if m > 1:
        factors.append((m, 1))
    return Factorization(n=n, factors=tuple(factors))


@lru_cache(maxsize=CACHE_SIZE)
def divisors(n: int) -> tuple[int, ...]:
    result = [1]
    for p, a in factorize(n).factors:
        result = [d * p**i for d in result for i in range(a + 1)]
    return tuple(sorted(result))


def primes_up_to(limit: int) -> list[int]:
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i, flag in enumerate(sieve) if flag]


def euler_phi(n: int) -> int:
    result = 1
    for p, a in factorize(n).factors:
        result *= (p - 1) * p ** (a - 1)
    return result


def tau(n: int) -> int:
    return math.prod(a + 1 for a in factorize(n).exponents)


def mobius(n: int) -> int:
    factors = factorize(n).factors
    if any(a > 1 for _, a in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def mobius_unitary(n: int) -> int:
    """Unitary Mobius function mu*(n) = (-1)^omega(n)."""
    return -1 if omega_small(n) % 2 else 1


def liouville(n: int) -> int:
    return -1 if omega_big(n) % 2 else 1


def omega_small(n: int) -> int:
    return len(factorize(n).factors)


def omega_big(n: int) -> int:
    return sum(factorize(n).exponents)


def squarefree_kernel(n: int) -> int:
    return math.prod(factorize(n).primes)


def is_exponentially_odd(n: int) -> bool:
    return all(a % 2 == 1 for a in factorize(n).exponents)


def is_squarefree(n: int) -> bool:
    return all(a == 1 for a in factorize(n).exponents)


def is_square(n: int) -> bool:
    if n < 0:
        return False
    root = math.isqrt(n)
    return root * root == n


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    factors = factorize(n).factors
    return len(factors) == 1 and factors[0][1] == 1


def valuation(p: int, j: int) -> int | None:
    """Exponent of p in j; None stands for infinity (j = 0)."""
    if j == 0:
        return None
    v = 0
    while j % p == 0:
        j //= p
        v += 1
    return v
