"""Regular systems of divisors A, built from their per-prime-power type function t_A(p^a).

A(n) is never stored: it is synthesized from the types of the prime powers exactly dividing n,
A(p^a) = {1, p^t, p^2t, ..., p^a} with t = t_A(p^a), and A(mn) = A(m)A(n) for coprime m, n.
Type functions are user code, so each (p, a) is checked lazily the first time it is used.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass
from functools import lru_cache

from src.config import CACHE_SIZE
from src.errors import (
    REASON_CHAIN_BROKEN,
    REASON_NOT_POSITIVE,
    REASON_TYPE_NOT_DIVISOR,
    InvalidRegularSystem,
    RegularityViolation,
)
from src.numtheory import divisors, factorize, primes_up_to, valuation

TypeFunction = Callable[[int, int], int]
ArithmeticFunction = Callable[[int], int]


@dataclass(frozen=True)
class RegularSystem:
    name: str
    type_fn: TypeFunction

    def __str__(self) -> str:
        return self.name


def _type_all_divisors(p: int, a: int) -> int:
    return 1


def _type_unitary(p: int, a: int) -> int:
    return a


def _type_even_odd(p: int, a: int) -> int:
    return 2 if a % 2 == 0 else a


D = RegularSystem(name="D", type_fn=_type_all_divisors)
U = RegularSystem(name="U", type_fn=_type_unitary)
E = RegularSystem(name="E", type_fn=_type_even_odd)

BUILTIN_SYSTEMS: dict[str, RegularSystem] = {system.name: system for system in (D, U, E)}


def get_system(name: str) -> RegularSystem:
    system = BUILTIN_SYSTEMS.get(name.strip().upper())
    if system is None:
        raise ValueError(f"Unknown regular system '{name}'. Expected one of: {', '.join(BUILTIN_SYSTEMS)}")
    return system


def check_prime_power(A: RegularSystem, p: int, a: int) -> RegularityViolation | None:
    """Check condition (ii) at p^a: t | a and the chain p^t, p^2t, ... keeps type t."""
    t = A.type_fn(p, a)
    if not isinstance(t, int) or t < 1:
        return RegularityViolation(p, a, REASON_NOT_POSITIVE, f"t_A = {t!r}")
    if a % t != 0:
        return RegularityViolation(p, a, REASON_TYPE_NOT_DIVISOR, f"t_A = {t} does not divide {a}")
    for i in range(1, a // t + 1):
        t_i = A.type_fn(p, i * t)
        if t_i != t:
            return RegularityViolation(p, a, REASON_CHAIN_BROKEN, f"t_A({p}^{i * t}) = {t_i}, expected {t}")
    return None


def validate_system(A: RegularSystem, max_n: int) -> RegularityViolation | None:
    """Return the first violating prime power p^a <= max_n, or None when A passes."""
    if max_n < 2:
        raise ValueError(f"max_n must be >= 2, got {max_n}")
    for p in primes_up_to(max_n):
        a = 1
        q = p
        while q <= max_n:
            violation = check_prime_power(A, p, a)
            if violation is not None:
                return violation
            a += 1
            q *= p
    return None


@lru_cache(maxsize=CACHE_SIZE)
def prime_power_type(A: RegularSystem, p: int, a: int) -> int:
    violation = check_prime_power(A, p, a)
    if violation is not None:
        raise InvalidRegularSystem(A.name, violation)
    return A.type_fn(p, a)


def _typed_factors(A: RegularSystem, n: int) -> list[tuple[int, int, int]]:
    return [(p, a, prime_power_type(A, p, a)) for p, a in factorize(n).factors]


@lru_cache(maxsize=CACHE_SIZE)
def a_divisors(A: RegularSystem, n: int) -> tuple[int, ...]:
    result = [1]
    for p, a, t in _typed_factors(A, n):
        result = [d * p ** (i * t) for d in result for i in range(a // t + 1)]
    return tuple(sorted(result))


def is_a_divisor(A: RegularSystem, d: int, n: int) -> bool:
    if d < 1 or n % d != 0:
        return False
    for p, a, t in _typed_factors(A, n):
        b = valuation(p, d) or 0
        if b % t != 0:
            return False
    return True


def gcd_A(A: RegularSystem, j: int, n: int) -> int:
    """(j, n)_A, the largest member of A(n) dividing j; j = 0 gives n."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if j < 0:
        j = -j
    result = 1
    for p, a, t in _typed_factors(A, n):
        v = valuation(p, j)
        steps = a // t if v is None else min(v // t, a // t)
        result *= p ** (steps * t)
    return result


def is_A_primitive(A: RegularSystem, n: int) -> bool:
    factors = factorize(n).factors
    if len(factors) != 1:
        return False
    p, a = factors[0]
    return prime_power_type(A, p, a) == a


@lru_cache(maxsize=CACHE_SIZE)
def mobius_A(A: RegularSystem, n: int) -> int:
    result = 1
    for p, a, t in _typed_factors(A, n):
        if t != a:
            return 0
        result = -result
    return result


def a_convolve(A: RegularSystem, f: ArithmeticFunction, g: ArithmeticFunction, n: int) -> int:
    return sum(f(d) * g(n // d) for d in a_divisors(A, n))


def kappa_A(A: RegularSystem, n: int) -> int:
    return math.prod(p**t for p, _, t in _typed_factors(A, n))


def gamma_A(A: RegularSystem, n: int) -> int:
    return math.prod(p ** (a - t + 1) for p, a, t in _typed_factors(A, n))


@lru_cache(maxsize=CACHE_SIZE)
def euler_phi_A(A: RegularSystem, n: int) -> int:
    result = 1
    for p, a, t in _typed_factors(A, n):
        result *= p ** (a - t) * (p**t - 1)
    return result


def euler_phi_A_count(A: RegularSystem, n: int) -> int:
    return sum(1 for j in range(1, n + 1) if gcd_A(A, j, n) == 1)


def core_divisors(A: RegularSystem, n: int) -> tuple[int, ...]:
    core = gamma_A(A, n)
    return tuple(d for d in divisors(n) if d % core == 0)


def lift_via_core(A: RegularSystem, g: ArithmeticFunction, n: int) -> int:
    return sum(g(d) for d in core_divisors(A, n))


def a_transform_by_recursion(A: RegularSystem, g: ArithmeticFunction, n: int) -> int:
    """g_A(n) solved from sum_{d | n} g(d) = sum_{d in A(n)} g_A(d), recursing on A(n)."""
    memo: dict[int, int] = {}

    def solve(m: int) -> int:
        if m not in memo:
            total = sum(g(d) for d in divisors(m))
            memo[m] = total - sum(solve(d) for d in a_divisors(A, m) if d < m)
        return memo[m]

    return solve(n)


def kernel_ratio(A: RegularSystem, n: int) -> int:
    """n / kappa_A(n); the substitution exponent in Phi_{A,n}(x) = Phi_{A,kappa_A(n)}(x^(n/kappa_A(n)))."""
    return n // kappa_A(A, n)

