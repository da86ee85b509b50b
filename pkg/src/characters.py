"""
Dirichlet characters mod n with exact values in Z[zeta_m].

(Z/n)^x is generated via CRT by one primitive root per odd prime power, by -1 for 4 and by -1, 5
for 2^a with a >= 3. A character is the vector of exponents e_i with chi(g_i) = zeta_{o_i}^e_i,
and a discrete-log table per modulus turns chi(k) into a single exponent of zeta_order.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from src.config import CACHE_SIZE
from src.errors import InternalInconsistency, NonRationalResult
from src.numtheory import divisors, euler_phi, factorize
from src.polynomials.cyclotomic_integer import (
    CyclotomicInteger,
    cyclo_int_from_exponents,
    cyclo_int_from_weights,
    cyclo_int_is_integer,
)
from src.regular_systems import RegularSystem, a_convolve, a_divisors, gcd_A, mobius_A


@dataclass(frozen=True)
class _CharacterGroup:
    modulus: int
    generators: tuple[int, ...]
    orders: tuple[int, ...]
    logs: dict[int, tuple[int, ...]]


def _primitive_root_odd(p: int, a: int) -> int:
    prime_factors = factorize(p - 1).primes
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in prime_factors):
            break
    else:
        raise InternalInconsistency(f"no primitive root found mod {p}")
    if a > 1 and pow(g, p - 1, p * p) == 1:
        g += p
    return g


def _local_generators(p: int, a: int) -> list[tuple[int, int]]:
    """(generator mod p^a, order) pairs."""
    q = p**a
    if p != 2:
        return [(_primitive_root_odd(p, a), q - q // p)]
    if a == 1:
        return []
    if a == 2:
        return [(q - 1, 2)]
    return [(q - 1, 2), (5, 2 ** (a - 2))]


def _crt_lift(local: int, q: int, n: int) -> int:
    """The residue mod n that is `local` mod q and 1 mod n/q."""
    rest = n // q
    if rest == 1:
        return local % n
    # x = local + q*t with x = 1 mod rest
    t = ((1 - local) * pow(q, -1, rest)) % rest
    return (local + q * t) % n


@lru_cache(maxsize=CACHE_SIZE)
def character_group(n: int) -> _CharacterGroup:
    if n < 1:
        raise ValueError(f"modulus must be a positive integer, got {n}")
    generators: list[int] = []
    orders: list[int] = []
    for p, a in factorize(n).factors:
        q = p**a
        for local, order in _local_generators(p, a):
            generators.append(_crt_lift(local, q, n))
            orders.append(order)

    logs: dict[int, tuple[int, ...]] = {}
    for exponents in product(*(range(o) for o in orders)):
        k = 1
        for g, x in zip(generators, exponents):
            k = k * pow(g, x, n) % n
        logs[k % n] = exponents
    if len(logs) != euler_phi(n):
        raise InternalInconsistency(f"generators of (Z/{n})^x produced {len(logs)} residues, expected {euler_phi(n)}")
    return _CharacterGroup(n, tuple(generators), tuple(orders), logs)


@dataclass(frozen=True)
class DirichletCharacter:
    modulus: int
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        orders = character_group(self.modulus).orders
        if len(self.exponents) != len(orders):
            raise ValueError(f"character mod {self.modulus} needs {len(orders)} exponents, got {len(self.exponents)}")
        if any(not 0 <= e < o for e, o in zip(self.exponents, orders)):
            raise ValueError(f"exponents {self.exponents} out of range for generator orders {orders}")

    def _reduced_components(self) -> list[tuple[int, int]]:
        """(order, exponent) of chi(g_i) as zeta_order^exponent in lowest terms."""
        components = []
        for e, o in zip(self.exponents, character_group(self.modulus).orders):
            g = math.gcd(e, o)
            components.append((o // g, e // g))
        return components

    def order(self) -> int:
        return math.lcm(1, *(o for o, _ in self._reduced_components()))

    def exponent_at(self, k: int) -> int | None:
        """r with chi(k) = zeta_order^r, or None when gcd(k, n) > 1."""
        logs = character_group(self.modulus).logs.get(k % self.modulus)
        if logs is None:
            return None
        order = self.order()
        return sum(e * x * (order // o) for (o, e), x in zip(self._reduced_components(), logs)) % order

    def is_principal(self) -> bool:
        return all(e == 0 for e in self.exponents)

    def __str__(self) -> str:
        return f"chi_{self.modulus}{list(self.exponents)}"


def enumerate_characters(n: int) -> list[DirichletCharacter]:
    orders = character_group(n).orders
    return [DirichletCharacter(n, exponents) for exponents in product(*(range(o) for o in orders))]


def principal_character(n: int) -> DirichletCharacter:
    return DirichletCharacter(n, (0,) * len(character_group(n).orders))


def conjugate(chi: DirichletCharacter) -> DirichletCharacter:
    orders = character_group(chi.modulus).orders
    return DirichletCharacter(chi.modulus, tuple((-e) % o for e, o in zip(chi.exponents, orders)))


def char_value(chi: DirichletCharacter, k: int) -> CyclotomicInteger:
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    order = chi.order()
    r = chi.exponent_at(k)
    if r is None:
        return CyclotomicInteger.zero(order)
    return cyclo_int_from_exponents(order, (r,))


def char_sum(chi: DirichletCharacter, weights: Callable[[int], int], ks: range | list[int]) -> CyclotomicInteger:
    """sum of weights(k) chi(k) over ks, built in one reduction."""
    order = chi.order()
    totals: dict[int, int] = {}
    for k in ks:
        r = chi.exponent_at(k)
        if r is not None:
            totals[r] = totals.get(r, 0) + weights(k)
    return cyclo_int_from_weights(order, totals)


@lru_cache(maxsize=CACHE_SIZE)
def conductor(chi: DirichletCharacter) -> int:
    """Smallest d | n with chi(k) = 1 for every unit k = 1 (mod d)."""
    n = chi.modulus
    for d in divisors(n):
        if all(chi.exponent_at(k) == 0 for k in range(1, n + 1, d) if math.gcd(k, n) == 1):
            return d
    return n


def is_primitive(chi: DirichletCharacter) -> bool:
    return conductor(chi) == chi.modulus


def induced_primitive(chi: DirichletCharacter) -> DirichletCharacter:
    """The primitive character mod conductor(chi) that induces chi."""
    n = chi.modulus
    d = conductor(chi)
    order = chi.order()
    group = character_group(d)
    exponents = []
    for g, o in zip(group.generators, group.orders):
        # a lift of g mod d that is a unit mod n
        lift = next(g + t * d for t in range(n // d + 1) if math.gcd(g + t * d, n) == 1)
        r = chi.exponent_at(lift)
        if r is None or (r * o) % order:
            raise InternalInconsistency(f"{chi} does not factor through (Z/{d})^x at generator {g}")
        exponents.append((r * o // order) % o)
    return DirichletCharacter(d, tuple(exponents))


def char_residue_class_sum(chi: DirichletCharacter, d: int, s: int) -> CyclotomicInteger:
    """sum of chi(k) over 1 <= k <= n with k = s (mod d); zero for primitive chi and proper d | n."""
    n = chi.modulus
    if n % d != 0 or d == n:
        raise ValueError(f"d must be a proper divisor of {n}, got {d}")
    if not is_primitive(chi):
        raise ValueError(f"{chi} is not primitive")
    return char_sum(chi, lambda _k: 1, [k for k in range(1, n + 1) if (k - s) % d == 0])


def count_crt_coprime_brute(n: int, d: int, e: int, r: int) -> int:
    return sum(1 for j in range(1, n + 1) if math.gcd(j, n) == 1 and (j - r) % d == 0 and (j - 1) % e == 0)


def count_crt_coprime_closed(n: int, d: int, e: int, r: int) -> int:
    if n % d or n % e:
        raise ValueError(f"d = {d} and e = {e} must divide n = {n}")
    g = math.gcd(d, e)
    if math.gcd(r, d) != 1 or (r - 1) % g != 0:
        return 0
    value, remainder = divmod(euler_phi(n) * euler_phi(g), euler_phi(d) * euler_phi(e))
    if remainder:
        raise InternalInconsistency(f"CRT count for n={n}, d={d}, e={e} is not an integer")
    return value


def count_crt_coprime(n: int, d: int, e: int, r: int) -> int:
    """#{j <= n : (j, n) = 1, j = r (mod d), j = 1 (mod e)}, by brute count and closed form."""
    if not 1 <= r <= d:
        raise ValueError(f"r must satisfy 1 <= r <= d = {d}, got {r}")
    brute = count_crt_coprime_brute(n, d, e, r)
    closed = count_crt_coprime_closed(n, d, e, r)
    if brute != closed:
        raise InternalInconsistency(f"CRT count n={n}, d={d}, e={e}, r={r}: brute {brute} != closed form {closed}")
    return closed


def count_primitive_characters(n: int) -> int:
    return sum(1 for chi in enumerate_characters(n) if is_primitive(chi))


def primitive_character_count_formula(n: int) -> int:
    """n prod_{p || n} (1 - 2/p) prod_{p^2 | n} (1 - 1/p)^2."""
    result = 1
    for p, a in factorize(n).factors:
        result *= p - 2 if a == 1 else p ** (a - 2) * (p - 1) ** 2
    return result


def menon_char_sum(A: RegularSystem, f: Callable[[int], int], n: int, chi: DirichletCharacter) -> CyclotomicInteger:
    """sum_{j=1..n} f((j-1, n)_A) chi(j), exact; raises NonRationalResult unless it reduces to an integer."""
    if chi.modulus != n:
        raise ValueError(f"character modulus {chi.modulus} does not match n = {n}")
    value = char_sum(chi, lambda j: f(gcd_A(A, j - 1, n)), range(1, n + 1))
    if cyclo_int_is_integer(value) is None:
        raise NonRationalResult(f"Menon character sum for A={A.name}, n={n}, {chi} is {value}, not rational")
    return value


def menon_char_rhs(A: RegularSystem, f: Callable[[int], int], n: int, chi: DirichletCharacter) -> Fraction:
    """phi(n) times the sum of (mu_A *_A f)(e) / phi(e) over e in A(n) divisible by the conductor."""
    d = conductor(chi)

    def mu_A(m: int) -> int:
        return mobius_A(A, m)

    total = sum(
        (Fraction(a_convolve(A, mu_A, f, e), euler_phi(e)) for e in a_divisors(A, n) if e % d == 0),
        Fraction(0),
    )
    return euler_phi(n) * total
